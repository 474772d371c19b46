// Copyright 2026 The oraclescan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORACLESCAN_SCAN_HPP_
#define ORACLESCAN_SCAN_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oraclescan/analytics.hpp"
#include "oraclescan/finding.hpp"

namespace oraclescan {

// One row of a `file,project_id,domain,audited_frequency` manifest.
struct ManifestRecord {
  std::string file;
  std::optional<std::string> project_id;
  std::optional<std::string> domain;
  std::optional<std::uint64_t> audited_frequency;
  int line = 0;
};

class ManifestParseError : public std::runtime_error {
 public:
  ManifestParseError(int line, const std::string& reason)
      : std::runtime_error("manifest line " + std::to_string(line) + ": " +
                           reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EmptyCorpus : public std::runtime_error {
 public:
  explicit EmptyCorpus(const std::string& what) : std::runtime_error(what) {}
};

// Header row required. Records sharing a project_id form one project; they
// must not disagree on domain or audited_frequency.
std::vector<ManifestRecord> ParseManifest(std::string_view bytes);

struct ScanOptions {
  AnalysisOptions analysis;
  std::string keyword_source = "default";  // "default" or the file path
  Denominator denominator = Denominator::kParsed;
  std::optional<LevelThresholds> thresholds;  // fixed instead of fitted
  FitScale fit_scale = FitScale::kLog1p;
  bool use_cache = true;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> manifest;
  // Called for every file analysed from source. When set, cached findings
  // are not reused so every file reaches the callback.
  std::function<void(const SourceFile&, const FileAnalysis&)> on_analysis;
};

struct ProjectRow {
  ProjectRecord record;
  std::vector<std::string> files;
  bool audited = false;
};

struct CorpusReport {
  std::string tool_version;
  std::string timestamp;

  // Options echo.
  std::string keyword_source;
  std::string keywords_hash;
  std::string options_hash;
  Denominator denominator = Denominator::kParsed;
  bool require_branches = false;
  bool structural_interacts = false;
  std::string thresholds_mode;  // "auto" or "manual"
  FitScale fit_scale = FitScale::kLog1p;

  std::vector<ContractFinding> findings;  // ordered by file
  std::vector<std::string> missing;       // manifest files not readable
  std::vector<ProjectRow> projects;       // ordered by project id
  CorpusSummary summary;
  std::optional<std::string> thresholds_error;
  std::optional<std::string> correlation_error;

  std::size_t ParsedOk() const;
};

struct ScanResult {
  CorpusReport report;
  std::vector<std::string> warnings;
  std::size_t cache_hits = 0;
};

// Directory root: every *.sol file below it, unless options.manifest is set.
// File root: treated as the manifest, paths relative to its directory.
ScanResult Scan(const std::filesystem::path& root, const ScanOptions& options);

// SOURCE_DATE_EPOCH when set, else the current time; ISO-8601 UTC.
std::string ReportTimestamp();

}  // namespace oraclescan

#endif  // ORACLESCAN_SCAN_HPP_
