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

#ifndef ORACLESCAN_FINDING_HPP_
#define ORACLESCAN_FINDING_HPP_

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oraclescan/cfg.hpp"
#include "oraclescan/keywords.hpp"
#include "oraclescan/name_index.hpp"
#include "oraclescan/parser.hpp"
#include "oraclescan/strategy.hpp"

namespace oraclescan {

struct AnalysisOptions {
  std::vector<KeywordEntry> keywords = DefaultKeywords();
  bool require_branches = false;
  bool structural_interacts = false;
  // Name kinds that take part in keyword matching.
  std::set<NameKind> index_kinds = {NameKind::kContract, NameKind::kInterface,
                                    NameKind::kLibrary,  NameKind::kFunction,
                                    NameKind::kModifier, NameKind::kEvent};

  // Hash over everything that can change a finding.
  std::string Hash() const;
};

struct MatchSummary {
  std::string keyword;
  KeywordCategory category;
  std::string name;
  NameKind kind;
  int line = 0;

  friend bool operator==(const MatchSummary&, const MatchSummary&) = default;
};

struct FunctionComplexity {
  std::string name;
  std::string kind;  // FunctionDef / ConstructorDef / ModifierDef
  int line = 0;
  long complexity = 0;

  friend bool operator==(const FunctionComplexity&,
                         const FunctionComplexity&) = default;
};

struct ContractEntry {
  std::string name;
  std::string kind;  // ContractDef / InterfaceDef / LibraryDef
  bool interacts = false;
  std::vector<MatchSummary> matches;
  StrategySet strategies;
  std::vector<FunctionComplexity> functions;
  long complexity = 0;

  friend bool operator==(const ContractEntry&, const ContractEntry&) = default;
};

struct DiagnosticSummary {
  std::string message;
  int line = 0;
  int column = 0;

  friend bool operator==(const DiagnosticSummary&,
                         const DiagnosticSummary&) = default;
};

// Per-file result of the analysis pipeline.
struct ContractFinding {
  std::string file;
  std::string content_hash;
  bool parse_ok = false;
  std::vector<DiagnosticSummary> diagnostics;
  std::vector<ContractEntry> contracts;
  // Matches on top-level names outside any contract (free functions, ...).
  std::vector<MatchSummary> other_matches;
  long complexity = 0;  // V(G) over every body in the file

  std::size_t MatchCount() const;
  bool Interacts() const;
  StrategySet Strategies() const;
  std::vector<KeywordMatch> AllMatches() const;

  friend bool operator==(const ContractFinding&,
                         const ContractFinding&) = default;
};

// Everything computed for one file; the AST, index and CFG back the debug
// dumps.
struct FileAnalysis {
  ParseResult parse;
  std::vector<NameEntry> names;
  ControlFlowGraph cfg;
  ContractFinding finding;
};

FileAnalysis AnalyzeFile(const SourceFile& file,
                         const AnalysisOptions& options);

nlohmann::ordered_json FindingToJson(const ContractFinding& finding);
ContractFinding FindingFromJson(const nlohmann::json& json);

}  // namespace oraclescan

#endif  // ORACLESCAN_FINDING_HPP_
