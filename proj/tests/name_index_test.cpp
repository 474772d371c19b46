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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oraclescan/name_index.hpp"
#include "oraclescan/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generator.hpp"

namespace oraclescan {
namespace {

using testing::Listing;

std::vector<std::pair<std::string, NameKind>> Pairs(
    std::span<const NameEntry> entries) {
  std::vector<std::pair<std::string, NameKind>> out;
  for (const NameEntry& e : entries) out.emplace_back(e.name, e.kind);
  return out;
}

TEST(IndexUnit, ListingOne) {
  const AstNode ast = ParseSource(Listing(1)).root;
  const auto entries = IndexUnit(ast, "l1.sol");
  EXPECT_EQ(Pairs(entries),
            (std::vector<std::pair<std::string, NameKind>>{
                {"CentralizedOracle", NameKind::kContract},
                {"onlyOracle", NameKind::kModifier},
                {"updateData", NameKind::kFunction}}));
  for (const NameEntry& e : entries) EXPECT_EQ(e.file, "l1.sol");
}

TEST(IndexUnit, ListingFour) {
  const AstNode ast = ParseSource(Listing(4)).root;
  EXPECT_EQ(Pairs(IndexUnit(ast, "l4.sol")),
            (std::vector<std::pair<std::string, NameKind>>{
                {"CrossChainBridge", NameKind::kContract},
                {"Locked", NameKind::kEvent},
                {"lockTokens", NameKind::kFunction}}));
}

TEST(IndexUnit, EmptyUnit) {
  EXPECT_TRUE(IndexUnit(AstNode{NodeKind::kSourceUnit}, "x.sol").empty());
}

TEST(IndexUnit, InterfaceAndLibraryKinds) {
  const AstNode ast =
      Parse(Tokenize("interface IFeed { function get() external; }\n"
                     "library MathLib { function add() internal {} }"))
          .root;
  EXPECT_EQ(Pairs(IndexUnit(ast, "f.sol")),
            (std::vector<std::pair<std::string, NameKind>>{
                {"IFeed", NameKind::kInterface},
                {"get", NameKind::kFunction},
                {"MathLib", NameKind::kLibrary},
                {"add", NameKind::kFunction}}));
}

TEST(BuildIndex, EmptyCorpus) {
  const NameIndex index = BuildIndex({});
  EXPECT_TRUE(index.entries.empty());
}

// Listing 1 contributes 3 names and Listing 5 contributes 2; the base
// `Verifier` and the constructor are not definitions with names.
TEST(BuildIndex, ListingsOneAndFive) {
  const AstNode a = ParseSource(Listing(1)).root;
  const AstNode b = ParseSource(Listing(5)).root;
  const std::vector<IndexedUnit> units = {{&b, "l5.sol"}, {&a, "l1.sol"}};
  const NameIndex index = BuildIndex(units);
  EXPECT_EQ(Pairs(index.entries),
            (std::vector<std::pair<std::string, NameKind>>{
                {"CentralizedOracle", NameKind::kContract},
                {"onlyOracle", NameKind::kModifier},
                {"updateData", NameKind::kFunction},
                {"ZKProofVerifier", NameKind::kContract},
                {"verifyProof", NameKind::kFunction}}));
  EXPECT_EQ(index.EntriesOf(0).size(), 3u);
  EXPECT_EQ(index.EntriesOf(1).size(), 2u);
}

TEST(BuildIndex, IdenticalNamesInTwoFilesAreDistinct) {
  const AstNode a = Parse(Tokenize("contract Token {}")).root;
  const std::vector<IndexedUnit> units = {{&a, "a.sol"}, {&a, "b.sol"}};
  const NameIndex index = BuildIndex(units);
  ASSERT_EQ(index.entries.size(), 2u);
  EXPECT_EQ(index.entries[0].file, "a.sol");
  EXPECT_EQ(index.entries[1].file, "b.sol");
  EXPECT_EQ(index.EntriesOf(1).size(), 1u);
}

std::size_t CountKind(const AstNode& root, NodeKind kind) {
  std::size_t n = 0;
  ForEachNode(root, [&](const AstNode& node) { n += node.kind == kind; });
  return n;
}

class GeneratedCorpus : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      asts_.push_back(Parse(Tokenize(testing::GenerateUnit(rng).Render())).root);
    }
    asts_.push_back(ParseSource(Listing(2)).root);
    asts_.push_back(ParseSource(Listing(4)).root);
    for (std::size_t i = 0; i < asts_.size(); ++i) {
      units_.push_back({&asts_[i], "f" + std::to_string(i) + ".sol"});
    }
  }
  std::vector<AstNode> asts_;
  std::vector<IndexedUnit> units_;
};

TEST_F(GeneratedCorpus, CompletenessAgainstAstWalk) {
  const NameIndex index = BuildIndex(units_);
  const std::pair<NameKind, NodeKind> kinds[] = {
      {NameKind::kContract, NodeKind::kContractDef},
      {NameKind::kInterface, NodeKind::kInterfaceDef},
      {NameKind::kFunction, NodeKind::kFunctionDef},
      {NameKind::kModifier, NodeKind::kModifierDef},
      {NameKind::kEvent, NodeKind::kEventDef}};
  for (const auto& [name_kind, node_kind] : kinds) {
    std::size_t expected = 0;
    for (const AstNode& ast : asts_) expected += CountKind(ast, node_kind);
    const auto actual = std::count_if(
        index.entries.begin(), index.entries.end(),
        [&](const NameEntry& e) { return e.kind == name_kind; });
    EXPECT_EQ(static_cast<std::size_t>(actual), expected) << ToString(name_kind);
  }
}

TEST_F(GeneratedCorpus, ShuffleStability) {
  const NameIndex reference = BuildIndex(units_);
  std::mt19937_64 rng(99);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(units_.begin(), units_.end(), rng);
    const NameIndex shuffled = BuildIndex(units_);
    EXPECT_EQ(shuffled.entries, reference.entries);
    EXPECT_EQ(shuffled.file_offsets, reference.file_offsets);
  }
}

TEST_F(GeneratedCorpus, OrderedByFileThenSpan) {
  const NameIndex index = BuildIndex(units_);
  for (std::size_t i = 1; i < index.entries.size(); ++i) {
    const NameEntry& a = index.entries[i - 1];
    const NameEntry& b = index.entries[i];
    EXPECT_TRUE(a.file < b.file ||
                (a.file == b.file && a.span.start <= b.span.start));
  }
}

TEST(IndexCsv, HeaderAndRows) {
  const AstNode a = ParseSource(Listing(1)).root;
  const std::vector<IndexedUnit> units = {{&a, "l1.sol"}};
  EXPECT_EQ(IndexToCsv(BuildIndex(units)),
            "name,kind,file,line\n"
            "CentralizedOracle,Contract,l1.sol,1\n"
            "onlyOracle,Modifier,l1.sol,4\n"
            "updateData,Function,l1.sol,10\n");
}

}  // namespace
}  // namespace oraclescan
