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

#ifndef ORACLESCAN_REPORT_HPP_
#define ORACLESCAN_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oraclescan/scan.hpp"

namespace oraclescan {

enum class ReportFormat { kJson, kCsv };

std::optional<ReportFormat> ReportFormatFromString(std::string_view text);

class UnwritableOutput : public std::runtime_error {
 public:
  explicit UnwritableOutput(const std::string& what)
      : std::runtime_error(what) {}
};

// report.json content; schema in docs/report-schema.md.
std::string ReportToJson(const CorpusReport& report);

// (file name, content) pairs: findings.csv, levels.csv, keyword_counts.csv,
// complexity_scatter.csv, domain_strategy.csv.
std::vector<std::pair<std::string, std::string>> ReportToCsv(
    const CorpusReport& report);

// Writes report.json or the CSV set into `dir`, creating it if needed.
// Returns the written paths.
std::vector<std::filesystem::path> WriteReport(const CorpusReport& report,
                                               ReportFormat format,
                                               const std::filesystem::path& dir);

}  // namespace oraclescan

#endif  // ORACLESCAN_REPORT_HPP_
