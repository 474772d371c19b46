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

#include "oraclescan/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "oraclescan/csv.hpp"

namespace oraclescan {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::optional<ReportFormat> ReportFormatFromString(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

namespace {

// JSON has no infinities; non-finite values are written as null.
Json Number(double value) {
  return std::isfinite(value) ? Json(value) : Json(nullptr);
}

std::string JoinStrategies(const StrategySet& strategies) {
  std::string out;
  for (StrategyLabel s : strategies) {
    if (!out.empty()) out.push_back(';');
    out += ToString(s);
  }
  return out;
}


}  // namespace

std::string ReportToJson(const CorpusReport& report) {
  Json doc;
  doc["tool"] = "oraclescan";
  doc["tool_version"] = report.tool_version;
  doc["timestamp"] = report.timestamp;
  doc["options"] = {
      {"keyword_source", report.keyword_source},
      {"keywords_hash", report.keywords_hash},
      {"options_hash", report.options_hash},
      {"denominator", ToString(report.denominator)},
      {"require_branches", report.require_branches},
      {"structural_interacts", report.structural_interacts},
      {"thresholds_mode", report.thresholds_mode},
      {"threshold_scale", ToString(report.fit_scale)},
  };

  auto findings = Json::array();
  for (const ContractFinding& f : report.findings) {
    findings.push_back(FindingToJson(f));
  }
  doc["findings"] = std::move(findings);
  doc["missing"] = report.missing;

  const CorpusSummary& s = report.summary;
  auto projects = Json::array();
  for (const ProjectRow& row : report.projects) {
    Json p;
    p["project_id"] = row.record.project_id;
    p["files"] = row.files;
    p["domain"] = row.record.domain ? Json(*row.record.domain) : Json(nullptr);
    p["access_frequency"] = row.record.access_frequency;
    p["frequency_source"] = row.audited ? "audited" : "matches";
    p["complexity"] = row.record.complexity;
    p["level"] = s.thresholds
                     ? Json(ToString(AssignLevel(row.record.access_frequency,
                                                 *s.thresholds)))
                     : Json(nullptr);
    auto strategies = Json::array();
    for (StrategyLabel l : row.record.strategies) {
      strategies.push_back(ToString(l));
    }
    p["strategies"] = std::move(strategies);
    projects.push_back(std::move(p));
  }
  doc["projects"] = std::move(projects);

  Json summary;
  summary["scanned"] = s.scanned;
  summary["parsed_ok"] = s.parsed_ok;
  summary["interacting"] = s.interacting;
  summary["denominator"] = ToString(s.denominator);
  summary["proportion_percent"] = Number(s.proportion_percent);
  summary["projects"] = s.projects;
  summary["mean_access_frequency"] = Number(s.mean_access_frequency);
  summary["max_access_frequency"] = s.max_access_frequency;
  if (s.thresholds) {
    summary["thresholds"] = {{"t1", Number(s.thresholds->t1)},
                             {"t2", Number(s.thresholds->t2)}};
  } else {
    summary["thresholds"] = nullptr;
  }
  if (report.thresholds_error) {
    summary["thresholds_error"] = *report.thresholds_error;
  }
  Json levels = Json::object();
  for (const auto& [level, count] : s.level_counts) {
    levels[std::string(ToString(level))] = count;
  }
  summary["level_counts"] = std::move(levels);
  auto keyword_usage = Json::array();
  for (const KeywordUsage& u : s.keyword_usage) {
    keyword_usage.push_back({{"keyword", u.keyword},
                             {"category", ToString(u.category)},
                             {"count", u.count}});
  }
  summary["keyword_usage"] = std::move(keyword_usage);
  auto domain_strategy = Json::array();
  for (const auto& [key, count] : s.domain_strategy) {
    domain_strategy.push_back(
        {{"domain", key.first}, {"strategy", key.second}, {"count", count}});
  }
  summary["domain_strategy"] = std::move(domain_strategy);
  if (s.correlation) {
    summary["correlation"] = {{"r", Number(s.correlation->r)},
                              {"t_stat", Number(s.correlation->t_stat)},
                              {"p_two_sided", Number(s.correlation->p_two_sided)},
                              {"n", s.correlation->n}};
  } else {
    summary["correlation"] = nullptr;
  }
  if (report.correlation_error) {
    summary["correlation_error"] = *report.correlation_error;
  }
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> ReportToCsv(
    const CorpusReport& report) {
  const CorpusSummary& s = report.summary;
  std::vector<std::pair<std::string, std::string>> files;

  std::string findings =
      "file,contract,interacts,match_count,strategies,complexity\n";
  for (const ContractFinding& f : report.findings) {
    for (const ContractEntry& c : f.contracts) {
      findings += CsvRow({f.file, c.name, c.interacts ? "true" : "false",
                          std::to_string(c.matches.size()),
                          JoinStrategies(c.strategies),
                          std::to_string(c.complexity)});
    }
  }
  files.emplace_back("findings.csv", std::move(findings));

  std::string levels = "level,count\n";
  for (const auto& [level, count] : s.level_counts) {
    levels += CsvRow({std::string(ToString(level)), std::to_string(count)});
  }
  files.emplace_back("levels.csv", std::move(levels));

  std::string keywords = "keyword,category,count\n";
  for (const KeywordUsage& u : s.keyword_usage) {
    keywords += CsvRow({u.keyword, std::string(ToString(u.category)),
                        std::to_string(u.count)});
  }
  files.emplace_back("keyword_counts.csv", std::move(keywords));

  std::string scatter = "project_id,access_frequency,complexity\n";
  for (const ProjectRow& row : report.projects) {
    scatter += CsvRow({row.record.project_id,
                       std::to_string(row.record.access_frequency),
                       std::to_string(row.record.complexity)});
  }
  files.emplace_back("complexity_scatter.csv", std::move(scatter));

  std::string domains = "domain,strategy,count\n";
  for (const auto& [key, count] : s.domain_strategy) {
    domains += CsvRow({key.first, key.second, std::to_string(count)});
  }
  files.emplace_back("domain_strategy.csv", std::move(domains));
  return files;
}

std::vector<fs::path> WriteReport(const CorpusReport& report,
                                  ReportFormat format, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw UnwritableOutput("cannot create " + dir.string() + ": " +
                           ec.message());
  }
  std::vector<std::pair<std::string, std::string>> files;
  if (format == ReportFormat::kJson) {
    files.emplace_back("report.json", ReportToJson(report));
  } else {
    files = ReportToCsv(report);
  }
  std::vector<fs::path> written;
  for (const auto& [name, content] : files) {
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw UnwritableOutput("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace oraclescan
