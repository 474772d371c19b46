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

#ifndef ORACLESCAN_STRATEGY_HPP_
#define ORACLESCAN_STRATEGY_HPP_

#include <optional>
#include <set>
#include <string_view>

#include "oraclescan/ast.hpp"

namespace oraclescan {

enum class StrategyLabel {
  kCentralizedOracle,
  kDecentralizedOracle,
  kSidechain,
  kCrossChainBridge,
  kZkp,
};

inline constexpr StrategyLabel kAllStrategies[] = {
    StrategyLabel::kCentralizedOracle, StrategyLabel::kDecentralizedOracle,
    StrategyLabel::kSidechain, StrategyLabel::kCrossChainBridge,
    StrategyLabel::kZkp};

std::string_view ToString(StrategyLabel label);
std::optional<StrategyLabel> StrategyLabelFromString(std::string_view text);

using StrategySet = std::set<StrategyLabel>;

// Structural interaction-strategy rules, applied to one contract, interface
// or library subtree. A contract can match several rules or none.
//
//  CentralizedOracle   a modifier requiring msg.sender == <address state
//                      var> guards a state-mutating function; or a state var
//                      named *oracle* gates (via such a require) a function
//                      that assigns.
//  DecentralizedOracle a call to `.latestRoundData()`, or a reference to a
//                      name containing "aggregator".
//  Sidechain           a *locked* mapping incremented at msg.sender by a
//                      *lock* function that does not emit a chain event.
//  CrossChainBridge    a *lock* function emits an event with a *chain*
//                      parameter; or a declared name contains "bridge" or
//                      "crosschain".
//  Zkp                 a function named *verifyproof*, or `verify` taking a
//                      bytes-typed *proof* parameter.
//
// Name tests are case-insensitive substring tests.
StrategySet ClassifyStrategies(const AstNode& contract);

}  // namespace oraclescan

#endif  // ORACLESCAN_STRATEGY_HPP_
