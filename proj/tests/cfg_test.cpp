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

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oraclescan/cfg.hpp"
#include "oraclescan/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generator.hpp"

namespace oraclescan {
namespace {

using testing::Listing;

AstNode ParseText(const std::string& text) {
  const ParseResult result = Parse(Tokenize(text));
  EXPECT_TRUE(result.ok()) << text;
  return result.root;
}

std::size_t BodyCount(const AstNode& unit) {
  std::size_t n = 0;
  ForEachNode(unit, [&](const AstNode& node) {
    if (IsCallableDef(node.kind) && node.Body() != nullptr) ++n;
  });
  return n;
}

// Every node is reachable from its component's Entry, edges stay within a
// component, and each component has exactly one Entry and one Exit.
void CheckWellFormed(const ControlFlowGraph& cfg) {
  std::map<int, std::vector<int>> succ;
  for (const auto& [from, to] : cfg.edges) {
    ASSERT_GE(from, 0);
    ASSERT_LT(static_cast<std::size_t>(from), cfg.nodes.size());
    ASSERT_LT(static_cast<std::size_t>(to), cfg.nodes.size());
    EXPECT_EQ(cfg.component_of[from], cfg.component_of[to]);
    succ[from].push_back(to);
  }
  EXPECT_TRUE(std::is_sorted(cfg.edges.begin(), cfg.edges.end()));
  EXPECT_EQ(std::adjacent_find(cfg.edges.begin(), cfg.edges.end()),
            cfg.edges.end());
  std::vector<bool> seen(cfg.nodes.size(), false);
  for (std::size_t c = 0; c < cfg.components.size(); ++c) {
    const CfgComponent& comp = cfg.components[c];
    int entries = 0, exits = 0;
    for (std::size_t n = 0; n < cfg.nodes.size(); ++n) {
      if (cfg.component_of[n] != static_cast<int>(c)) continue;
      entries += cfg.nodes[n].kind == CfgNodeKind::kEntry;
      exits += cfg.nodes[n].kind == CfgNodeKind::kExit;
    }
    EXPECT_EQ(entries, 1);
    EXPECT_EQ(exits, 1);
    EXPECT_EQ(cfg.nodes[comp.entry].kind, CfgNodeKind::kEntry);
    EXPECT_EQ(cfg.nodes[comp.exit].kind, CfgNodeKind::kExit);
    std::queue<int> work;
    work.push(comp.entry);
    seen[comp.entry] = true;
    while (!work.empty()) {
      const int n = work.front();
      work.pop();
      for (int next : succ[n]) {
        if (!seen[next]) {
          seen[next] = true;
          work.push(next);
        }
      }
    }
  }
  for (std::size_t n = 0; n < cfg.nodes.size(); ++n) {
    EXPECT_TRUE(seen[n]) << "node " << n << " unreachable";
  }
}

TEST(BuildCfg, EmptyBody) {
  const ControlFlowGraph cfg =
      BuildCfg(ParseText("contract A { function f() public {} }"));
  ASSERT_EQ(cfg.components.size(), 1u);
  EXPECT_EQ(cfg.NodeCount(0), 2u);
  EXPECT_EQ(cfg.EdgeCount(0), 1u);
  EXPECT_EQ(Cyclomatic(cfg), 1);
}

TEST(BuildCfg, SingleIf) {
  const ControlFlowGraph cfg = BuildCfg(
      ParseText("contract A { function f() public { if (c) { x = 1; } } }"));
  ASSERT_EQ(cfg.components.size(), 1u);
  EXPECT_EQ(cfg.NodeCount(0), 5u);
  EXPECT_EQ(cfg.EdgeCount(0), 5u);
  std::multiset<CfgNodeKind> kinds;
  for (const CfgNode& n : cfg.nodes) kinds.insert(n.kind);
  EXPECT_EQ(kinds, (std::multiset<CfgNodeKind>{
                       CfgNodeKind::kEntry, CfgNodeKind::kBranch,
                       CfgNodeKind::kStatement, CfgNodeKind::kMerge,
                       CfgNodeKind::kExit}));
  EXPECT_EQ(Cyclomatic(cfg), 2);
}

TEST(BuildCfg, ListingOneUpdateData) {
  const ControlFlowGraph cfg = BuildCfg(ParseSource(Listing(1)).root);
  const auto it = std::find_if(
      cfg.components.begin(), cfg.components.end(),
      [](const CfgComponent& c) { return c.callable == "updateData"; });
  ASSERT_NE(it, cfg.components.end());
  const int c = static_cast<int>(it - cfg.components.begin());
  EXPECT_EQ(cfg.NodeCount(c), 3u);
  EXPECT_EQ(cfg.EdgeCount(c), 2u);
  EXPECT_EQ(it->owner, "CentralizedOracle");
}

TEST(Cyclomatic, EmptyGraph) {
  EXPECT_EQ(Cyclomatic(ControlFlowGraph{}), 0);
  EXPECT_EQ(Cyclomatic(BuildCfg(AstNode{NodeKind::kSourceUnit})), 0);
}

TEST(Cyclomatic, TwoStraightLineFunctions) {
  const ControlFlowGraph cfg = BuildCfg(ParseText(
      "contract A { function f() public { x = 1; y = 2; }\n"
      "             function g() public { z = 3; } }"));
  EXPECT_EQ(cfg.components.size(), 2u);
  EXPECT_EQ(Cyclomatic(cfg), 2);
}

TEST(Cyclomatic, LoopsAndElse) {
  const std::pair<std::string, long> cases[] = {
      {"if (a) { x = 1; } else { x = 2; }", 2},
      {"if (a) { } else if (b) { } else { }", 3},
      {"while (a) { x++; }", 2},
      {"while (a) { }", 2},
      {"for (;;) { }", 2},
      {"for (uint i = 0; i < n; i++) { if (i == 2) { break; } }", 3},
      {"do { x++; } while (x < 3);", 2},
      {"do { } while (x < 3);", 2},
      {"x = a ? 1 : 2;", 2},
      {"x = a ? (b ? 1 : 2) : (c ? 3 : 4);", 4},
      {"if (a ? b : c) { x = 1; }", 3},
      {"while (a) { while (b) { do { } while (c); } }", 4},
      {"require(a); assert(b);", 1},
      {"return a ? 1 : 2;", 2},
      {"x = a && b || c;", 1},
      {"unchecked { if (a) { x = 1; } }", 2},
  };
  for (const auto& [body, expected] : cases) {
    const AstNode unit =
        ParseText("contract A { function f() public { " + body + " } }");
    const ControlFlowGraph cfg = BuildCfg(unit);
    CheckWellFormed(cfg);
    EXPECT_EQ(Cyclomatic(cfg), expected) << body;
    EXPECT_EQ(DecisionPointCount(unit), expected) << body;
  }
}

TEST(Cyclomatic, RequireBranchesFlag) {
  const AstNode unit = ParseText(
      "contract A { function f() public { require(a); assert(b);\n"
      "  revert(\"x\"); if (c) { require(d, \"m\"); } } }");
  const CfgOptions strict{.require_branches = true};
  const ControlFlowGraph cfg = BuildCfg(unit, strict);
  CheckWellFormed(cfg);
  EXPECT_EQ(Cyclomatic(cfg), 6);
  EXPECT_EQ(DecisionPointCount(unit, strict), 6);
  EXPECT_EQ(Cyclomatic(BuildCfg(unit)), 2);
}

TEST(DecisionPointCount, Examples) {
  EXPECT_EQ(DecisionPointCount(ParseSource(Listing(1)).root), 3);
  EXPECT_EQ(DecisionPointCount(ParseText(
                "contract A { function f() public {\n"
                "  while (a) { if (b) { x = 1; } } } }")),
            3);
  EXPECT_EQ(DecisionPointCount(AstNode{NodeKind::kSourceUnit}), 0);
}

TEST(DecisionPointCount, BodylessDeclarationsContributeNothing) {
  const AstNode unit = ParseSource(Listing(2)).root;
  EXPECT_EQ(DecisionPointCount(unit), 2);
  EXPECT_EQ(Cyclomatic(BuildCfg(unit)), 2);
}

TEST(Cyclomatic, FixturesMatchOracle) {
  for (int i = 1; i <= 5; ++i) {
    const AstNode unit = ParseSource(Listing(i)).root;
    for (bool strict : {false, true}) {
      const CfgOptions opts{.require_branches = strict};
      const ControlFlowGraph cfg = BuildCfg(unit, opts);
      CheckWellFormed(cfg);
      EXPECT_EQ(Cyclomatic(cfg), DecisionPointCount(unit, opts));
      EXPECT_EQ(cfg.components.size(), BodyCount(unit));
    }
  }
}

TEST(Cyclomatic, GeneratedUnitsMatchOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const testing::GenUnit gen = testing::GenerateUnit(rng);
    const AstNode unit = ParseText(gen.Render());
    for (bool strict : {false, true}) {
      const CfgOptions opts{.require_branches = strict};
      const ControlFlowGraph cfg = BuildCfg(unit, opts);
      CheckWellFormed(cfg);
      const long v = Cyclomatic(cfg);
      ASSERT_EQ(v, DecisionPointCount(unit, opts)) << gen.Render();
      ASSERT_EQ(v, gen.ExpectedComplexity(strict)) << gen.Render();
      EXPECT_EQ(cfg.components.size(), gen.BodyCount());
      EXPECT_EQ(cfg.components.size(), BodyCount(unit));
      EXPECT_GE(v, static_cast<long>(cfg.components.size()));
      long per_component = 0;
      for (std::size_t c = 0; c < cfg.components.size(); ++c) {
        const long cv = ComponentCyclomatic(cfg, static_cast<int>(c));
        EXPECT_GE(cv, 1);
        per_component += cv;
      }
      EXPECT_EQ(per_component, v);
    }
  }
}

TEST(Cyclomatic, InsertingOneIfAddsOne) {
  std::mt19937_64 rng(77);
  int trials = 0;
  while (trials < 100) {
    testing::GenUnit gen = testing::GenerateUnit(rng);
    const long before = Cyclomatic(BuildCfg(ParseText(gen.Render())));
    if (!gen.InsertIf(rng)) continue;
    const long after = Cyclomatic(BuildCfg(ParseText(gen.Render())));
    ASSERT_EQ(after, before + 1) << gen.Render();
    ++trials;
  }
}

TEST(Dot, StableIdsAndKindLabels) {
  const ControlFlowGraph cfg = BuildCfg(
      ParseText("contract A { function f() public { if (c) { x = 1; } } }"));
  const std::string dot = ComponentToDot(cfg, 0);
  EXPECT_EQ(dot, ComponentToDot(cfg, 0));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("Branch"), std::string::npos);
  EXPECT_NE(dot.find("Merge"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos;
       p = dot.find("->", p + 2)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 5u);
}

}  // namespace
}  // namespace oraclescan
