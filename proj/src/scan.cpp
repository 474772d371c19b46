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

#include "oraclescan/scan.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oraclescan/cache.hpp"
#include "oraclescan/csv.hpp"
#include "oraclescan/version.hpp"

namespace oraclescan {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> NonEmpty(std::string text) {
  if (text.empty()) return std::nullopt;
  return text;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return buffer.str();
}

std::string Trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct CorpusEntry {
  std::string rel;  // report path
  fs::path abs;
  const ManifestRecord* record = nullptr;
};

}  // namespace

std::vector<ManifestRecord> ParseManifest(std::string_view bytes) {
  std::vector<ManifestRecord> records;
  std::istringstream in{std::string(bytes)};
  std::string line;
  std::vector<std::string> fields;
  int line_no = 0;
  bool header_seen = false;
  std::map<std::string, const ManifestRecord*> projects;
  std::set<std::string> files;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trimmed(line).empty() || line.front() == '#') continue;
    if (!SplitCsvLine(line, fields)) {
      throw ManifestParseError(line_no, "unterminated quote");
    }
    for (std::string& f : fields) f = Trimmed(f);
    if (!header_seen) {
      const std::vector<std::string> expected = {"file", "project_id",
                                                 "domain", "audited_frequency"};
      if (fields != expected) {
        throw ManifestParseError(
            line_no, "expected header 'file,project_id,domain,audited_frequency'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) {
      throw ManifestParseError(line_no, "expected 4 fields, got " +
                                            std::to_string(fields.size()));
    }
    ManifestRecord record;
    record.line = line_no;
    record.file = fields[0];
    if (record.file.empty()) throw ManifestParseError(line_no, "empty file");
    if (!files.insert(record.file).second) {
      throw ManifestParseError(line_no, "duplicate file '" + record.file + "'");
    }
    record.project_id = NonEmpty(fields[1]);
    record.domain = NonEmpty(fields[2]);
    if (!fields[3].empty()) {
      std::uint64_t value = 0;
      const char* begin = fields[3].data();
      const char* end = begin + fields[3].size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end) {
        throw ManifestParseError(line_no, "audited_frequency '" + fields[3] +
                                              "' is not a non-negative integer");
      }
      record.audited_frequency = value;
    }
    records.push_back(std::move(record));
  }
  if (!header_seen) throw ManifestParseError(line_no, "missing header");
  for (const ManifestRecord& r : records) {
    if (!r.project_id) continue;
    auto [it, inserted] = projects.emplace(*r.project_id, &r);
    if (inserted) continue;
    const ManifestRecord& first = *it->second;
    if ((r.domain && first.domain && *r.domain != *first.domain) ||
        (r.audited_frequency && first.audited_frequency &&
         *r.audited_frequency != *first.audited_frequency)) {
      throw ManifestParseError(r.line, "project '" + *r.project_id +
                                           "' has conflicting metadata");
    }
  }
  return records;
}

std::string ReportTimestamp() {
  std::time_t seconds = 0;
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  long long parsed = 0;
  if (epoch && *epoch &&
      std::from_chars(epoch, epoch + std::char_traits<char>::length(epoch),
                      parsed)
              .ec == std::errc()) {
    seconds = static_cast<std::time_t>(parsed);
  } else {
    seconds = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
  }
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::size_t CorpusReport::ParsedOk() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [](const ContractFinding& f) { return f.parse_ok; }));
}

ScanResult Scan(const fs::path& root, const ScanOptions& options) {
  ScanResult result;
  CorpusReport& report = result.report;

  std::vector<ManifestRecord> manifest;
  std::optional<fs::path> manifest_path = options.manifest;
  fs::path base = root;
  bool single_file = false;
  if (!fs::is_directory(root)) {
    if (!fs::exists(root)) {
      throw std::runtime_error("no such file or directory: " + root.string());
    }
    base = root.parent_path();
    if (root.extension() == ".sol" && !manifest_path) {
      single_file = true;
    } else if (!manifest_path) {
      manifest_path = root;
    }
  }
  std::vector<CorpusEntry> corpus;
  if (single_file) {
    corpus.push_back({root.filename().generic_string(), root, nullptr});
  } else if (manifest_path) {
    manifest = ParseManifest(ReadFile(*manifest_path));
    for (const ManifestRecord& r : manifest) {
      corpus.push_back({fs::path(r.file).lexically_normal().generic_string(),
                        base / r.file, &r});
    }
  } else {
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".sol") {
        continue;
      }
      corpus.push_back(
          {entry.path().lexically_relative(root).generic_string(),
           entry.path(), nullptr});
    }
  }
  if (corpus.empty()) {
    throw EmptyCorpus("no .sol files under " + root.string());
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.rel < b.rel;
            });

  const std::string options_hash = options.analysis.Hash();
  std::optional<ResultCache> cache;
  if (options.use_cache && !options.on_analysis) {
    cache.emplace(options.cache_dir.value_or(ResultCache::DefaultDirectory()));
  }

  std::map<std::string, const ManifestRecord*> record_of;
  for (const CorpusEntry& entry : corpus) {
    std::string text;
    try {
      text = ReadFile(entry.abs);
    } catch (const std::exception&) {
      report.missing.push_back(entry.rel);
      continue;
    }
    const SourceFile file = SourceFile::FromText(entry.rel, std::move(text));
    std::optional<ContractFinding> finding;
    if (cache) finding = cache->Lookup(file.content_hash, options_hash, file.path);
    if (finding) {
      ++result.cache_hits;
    } else {
      FileAnalysis analysis = AnalyzeFile(file, options.analysis);
      if (options.on_analysis) options.on_analysis(file, analysis);
      finding = std::move(analysis.finding);
      if (cache) cache->Store(options_hash, *finding);
    }
    record_of[entry.rel] = entry.record;
    report.findings.push_back(std::move(*finding));
  }
  if (cache) result.warnings = cache->warnings();

  // Projects: manifest project_id, else the file stem (relative path without
  // extension when stems collide).
  std::map<std::string, int> stem_uses;
  for (const ContractFinding& f : report.findings) {
    ++stem_uses[fs::path(f.file).stem().string()];
  }
  std::map<std::string, ProjectRow> projects;
  std::map<std::string, std::uint64_t> match_totals;
  for (const ContractFinding& f : report.findings) {
    const ManifestRecord* record = record_of[f.file];
    std::string id;
    if (record && record->project_id) {
      id = *record->project_id;
    } else {
      const fs::path path(f.file);
      id = stem_uses[path.stem().string()] > 1
               ? (path.parent_path() / path.stem()).generic_string()
               : path.stem().string();
    }
    ProjectRow& row = projects[id];
    row.record.project_id = id;
    row.files.push_back(f.file);
    if (record && record->domain) row.record.domain = record->domain;
    if (record && record->audited_frequency) {
      row.record.access_frequency = *record->audited_frequency;
      row.audited = true;
    }
    match_totals[id] += f.MatchCount();
    row.record.complexity += static_cast<std::uint64_t>(f.complexity);
    const StrategySet s = f.Strategies();
    row.record.strategies.insert(s.begin(), s.end());
  }
  for (auto& [id, row] : projects) {
    if (!row.audited) row.record.access_frequency = match_totals[id];
  }
  std::vector<ProjectRecord> records;
  for (auto& [id, row] : projects) {
    records.push_back(row.record);
    report.projects.push_back(std::move(row));
  }

  std::vector<std::uint64_t> frequencies;
  std::vector<double> xs, ys;
  for (const ProjectRecord& r : records) {
    frequencies.push_back(r.access_frequency);
    xs.push_back(static_cast<double>(r.access_frequency));
    ys.push_back(static_cast<double>(r.complexity));
  }
  std::optional<LevelThresholds> thresholds = options.thresholds;
  report.thresholds_mode = options.thresholds ? "manual" : "auto";
  if (!thresholds) {
    try {
      thresholds = FitThresholds(frequencies, options.fit_scale);
    } catch (const DegenerateDistribution& e) {
      report.thresholds_error = e.what();
    }
  }
  std::optional<CorrelationResult> correlation;
  try {
    correlation = Pearson(xs, ys);
  } catch (const std::invalid_argument& e) {
    report.correlation_error = e.what();
  }

  std::vector<KeywordMatch> all_matches;
  CorpusCounts counts;
  counts.scanned = report.findings.size();
  counts.denominator = options.denominator;
  for (const ContractFinding& f : report.findings) {
    for (KeywordMatch& m : f.AllMatches()) all_matches.push_back(std::move(m));
    if (!f.parse_ok) continue;
    ++counts.parsed_ok;
    if (f.Interacts()) ++counts.interacting;
  }
  report.summary =
      Summarize(counts, records, thresholds, correlation,
                UsageTable(options.analysis.keywords, all_matches));

  report.tool_version = kVersion;
  report.timestamp = ReportTimestamp();
  report.keyword_source = options.keyword_source;
  report.keywords_hash = Sha256Hex(KeywordsToCsv(options.analysis.keywords));
  report.options_hash = options_hash;
  report.denominator = options.denominator;
  report.require_branches = options.analysis.require_branches;
  report.structural_interacts = options.analysis.structural_interacts;
  report.fit_scale = options.fit_scale;
  return result;
}

}  // namespace oraclescan
