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

#ifndef ORACLESCAN_CFG_HPP_
#define ORACLESCAN_CFG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oraclescan/ast.hpp"

namespace oraclescan {

enum class CfgNodeKind { kEntry, kExit, kStatement, kBranch, kMerge };

std::string_view ToString(CfgNodeKind kind);

struct CfgNode {
  int id = 0;
  CfgNodeKind kind = CfgNodeKind::kStatement;
  std::optional<Span> ast_ref;
};

// One connected component per function, constructor or modifier body.
struct CfgComponent {
  std::string owner;     // enclosing contract name, empty for free functions
  std::string callable;  // function/modifier name, "constructor" otherwise
  NodeKind callable_kind = NodeKind::kFunctionDef;
  Span callable_span;
  int entry = 0;
  int exit = 0;
};

struct CfgOptions {
  // Treat require/assert/revert as decision points.
  bool require_branches = false;
};

// Node ids are dense: nodes[i].id == i. `component_of[i]` indexes
// `components`. Edges are unique and sorted.
struct ControlFlowGraph {
  std::vector<CfgNode> nodes;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> component_of;
  std::vector<CfgComponent> components;

  std::size_t NodeCount(int component) const;
  std::size_t EdgeCount(int component) const;
};

// Statements chain Entry -> s1 -> ... -> Exit. Branching constructs (if,
// loops, ternary, and RequireCall under require_branches) each add one
// Branch node whose out-degree raises E - N by exactly one.
ControlFlowGraph BuildCfg(const AstNode& unit, const CfgOptions& options = {});

// E - N + 2P over the whole graph; 0 for an empty graph.
long Cyclomatic(const ControlFlowGraph& cfg);

// E - N + 2 over one component.
long ComponentCyclomatic(const ControlFlowGraph& cfg, int component);

// Bodies plus decision constructs inside bodies, counted on the AST alone.
long DecisionPointCount(const AstNode& unit, const CfgOptions& options = {});

// DOT rendering of one component, node label = kind.
std::string ComponentToDot(const ControlFlowGraph& cfg, int component);

}  // namespace oraclescan

#endif  // ORACLESCAN_CFG_HPP_
