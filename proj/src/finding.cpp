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

#include "oraclescan/finding.hpp"

#include <stdexcept>

#include "oraclescan/version.hpp"

namespace oraclescan {

std::string AnalysisOptions::Hash() const {
  std::string canonical = "oraclescan ";
  canonical += kVersion;
  canonical += "\nrequire_branches=";
  canonical += require_branches ? "1" : "0";
  canonical += "\nstructural_interacts=";
  canonical += structural_interacts ? "1" : "0";
  canonical += "\nindex_kinds=";
  for (NameKind kind : index_kinds) {
    canonical += ToString(kind);
    canonical += ' ';
  }
  canonical += "\nkeywords:\n";
  canonical += KeywordsToCsv(keywords);
  return Sha256Hex(canonical);
}

std::size_t ContractFinding::MatchCount() const {
  std::size_t count = other_matches.size();
  for (const ContractEntry& c : contracts) count += c.matches.size();
  return count;
}

bool ContractFinding::Interacts() const {
  for (const ContractEntry& c : contracts) {
    if (c.interacts) return true;
  }
  return false;
}

StrategySet ContractFinding::Strategies() const {
  StrategySet out;
  for (const ContractEntry& c : contracts) {
    out.insert(c.strategies.begin(), c.strategies.end());
  }
  return out;
}

std::vector<KeywordMatch> ContractFinding::AllMatches() const {
  std::vector<KeywordMatch> out;
  auto add = [&](const MatchSummary& m) {
    NameEntry entry{m.name, m.kind, file, {{m.line, 1}, {m.line, 1}}};
    out.push_back({m.keyword, m.category, std::move(entry)});
  };
  for (const ContractEntry& c : contracts) {
    for (const MatchSummary& m : c.matches) add(m);
  }
  for (const MatchSummary& m : other_matches) add(m);
  return out;
}

namespace {

MatchSummary Summarize(const KeywordMatch& m) {
  return {m.keyword, m.category, m.entry.name, m.entry.kind,
          m.entry.span.start.line};
}

}  // namespace

FileAnalysis AnalyzeFile(const SourceFile& file,
                         const AnalysisOptions& options) {
  FileAnalysis analysis;
  analysis.parse = ParseSource(file);
  const AstNode& root = analysis.parse.root;
  analysis.names = IndexUnit(root, file.path);
  std::vector<NameEntry> matchable;
  for (const NameEntry& entry : analysis.names) {
    if (options.index_kinds.contains(entry.kind)) matchable.push_back(entry);
  }
  const std::vector<KeywordMatch> matches =
      MatchNames(matchable, options.keywords);
  const CfgOptions cfg_options{options.require_branches};
  analysis.cfg = BuildCfg(root, cfg_options);

  ContractFinding& finding = analysis.finding;
  finding.file = file.path;
  finding.content_hash = file.content_hash;
  finding.parse_ok = analysis.parse.ok();
  for (const ParseDiagnostic& d : analysis.parse.diagnostics) {
    finding.diagnostics.push_back(
        {d.message, d.span.start.line, d.span.start.column});
  }
  finding.complexity = Cyclomatic(analysis.cfg);

  std::vector<bool> scoped(matches.size(), false);
  for (const AstNode& node : root.children) {
    if (!IsContractLike(node.kind)) continue;
    ContractEntry entry;
    entry.name = std::string(node.NameOr());
    entry.kind = std::string(ToString(node.kind));
    for (std::size_t i = 0; i < matches.size(); ++i) {
      if (node.span.Contains(matches[i].entry.span)) {
        entry.matches.push_back(Summarize(matches[i]));
        scoped[i] = true;
      }
    }
    entry.strategies = ClassifyStrategies(node);
    entry.interacts =
        !entry.matches.empty() ||
        (options.structural_interacts && !entry.strategies.empty());
    for (std::size_t c = 0; c < analysis.cfg.components.size(); ++c) {
      const CfgComponent& component = analysis.cfg.components[c];
      if (!node.span.Contains(component.callable_span)) continue;
      const long v = ComponentCyclomatic(analysis.cfg, static_cast<int>(c));
      entry.functions.push_back({component.callable,
                                 std::string(ToString(component.callable_kind)),
                                 component.callable_span.start.line, v});
      entry.complexity += v;
    }
    finding.contracts.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (!scoped[i]) finding.other_matches.push_back(Summarize(matches[i]));
  }
  return analysis;
}

namespace {

nlohmann::ordered_json MatchToJson(const MatchSummary& m) {
  return {{"keyword", m.keyword},
          {"category", ToString(m.category)},
          {"name", m.name},
          {"kind", ToString(m.kind)},
          {"line", m.line}};
}

MatchSummary MatchFromJson(const nlohmann::json& j) {
  const auto category =
      KeywordCategoryFromString(j.at("category").get<std::string>());
  const auto kind = NameKindFromString(j.at("kind").get<std::string>());
  if (!category || !kind) throw std::invalid_argument("bad match record");
  return {j.at("keyword").get<std::string>(), *category,
          j.at("name").get<std::string>(), *kind, j.at("line").get<int>()};
}

nlohmann::ordered_json StrategiesToJson(const StrategySet& strategies) {
  auto out = nlohmann::ordered_json::array();
  for (StrategyLabel s : strategies) out.push_back(ToString(s));
  return out;
}

}  // namespace

nlohmann::ordered_json FindingToJson(const ContractFinding& finding) {
  nlohmann::ordered_json out;
  out["file"] = finding.file;
  out["content_hash"] = finding.content_hash;
  out["parse_ok"] = finding.parse_ok;
  auto diagnostics = nlohmann::ordered_json::array();
  for (const DiagnosticSummary& d : finding.diagnostics) {
    diagnostics.push_back(
        {{"message", d.message}, {"line", d.line}, {"column", d.column}});
  }
  out["diagnostics"] = std::move(diagnostics);
  out["interacts"] = finding.Interacts();
  out["match_count"] = finding.MatchCount();
  out["complexity"] = finding.complexity;
  auto contracts = nlohmann::ordered_json::array();
  for (const ContractEntry& c : finding.contracts) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["kind"] = c.kind;
    entry["interacts"] = c.interacts;
    auto matches = nlohmann::ordered_json::array();
    for (const MatchSummary& m : c.matches) matches.push_back(MatchToJson(m));
    entry["matches"] = std::move(matches);
    entry["strategies"] = StrategiesToJson(c.strategies);
    auto functions = nlohmann::ordered_json::array();
    for (const FunctionComplexity& f : c.functions) {
      functions.push_back({{"name", f.name},
                           {"kind", f.kind},
                           {"line", f.line},
                           {"complexity", f.complexity}});
    }
    entry["functions"] = std::move(functions);
    entry["complexity"] = c.complexity;
    contracts.push_back(std::move(entry));
  }
  out["contracts"] = std::move(contracts);
  auto other = nlohmann::ordered_json::array();
  for (const MatchSummary& m : finding.other_matches) {
    other.push_back(MatchToJson(m));
  }
  out["other_matches"] = std::move(other);
  return out;
}

ContractFinding FindingFromJson(const nlohmann::json& j) {
  ContractFinding finding;
  finding.file = j.at("file").get<std::string>();
  finding.content_hash = j.at("content_hash").get<std::string>();
  finding.parse_ok = j.at("parse_ok").get<bool>();
  for (const auto& d : j.at("diagnostics")) {
    finding.diagnostics.push_back({d.at("message").get<std::string>(),
                                   d.at("line").get<int>(),
                                   d.at("column").get<int>()});
  }
  finding.complexity = j.at("complexity").get<long>();
  for (const auto& c : j.at("contracts")) {
    ContractEntry entry;
    entry.name = c.at("name").get<std::string>();
    entry.kind = c.at("kind").get<std::string>();
    entry.interacts = c.at("interacts").get<bool>();
    for (const auto& m : c.at("matches")) {
      entry.matches.push_back(MatchFromJson(m));
    }
    for (const auto& s : c.at("strategies")) {
      const auto label = StrategyLabelFromString(s.get<std::string>());
      if (!label) throw std::invalid_argument("bad strategy label");
      entry.strategies.insert(*label);
    }
    for (const auto& f : c.at("functions")) {
      entry.functions.push_back({f.at("name").get<std::string>(),
                                 f.at("kind").get<std::string>(),
                                 f.at("line").get<int>(),
                                 f.at("complexity").get<long>()});
    }
    entry.complexity = c.at("complexity").get<long>();
    finding.contracts.push_back(std::move(entry));
  }
  for (const auto& m : j.at("other_matches")) {
    finding.other_matches.push_back(MatchFromJson(m));
  }
  return finding;
}

}  // namespace oraclescan
