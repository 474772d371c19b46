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

// Random Solidity source units for property tests.

#ifndef ORACLESCAN_TESTS_GENERATOR_HPP_
#define ORACLESCAN_TESTS_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oraclescan::testing {

struct GenStmt {
  enum Kind {
    kSimple,
    kIf,
    kIfElse,
    kFor,
    kWhile,
    kDo,
    kTernary,  // assignment with one or more ternaries
    kRequire,
    kBreak,
    kReturn,
  };
  Kind kind = kSimple;
  int ternaries = 0;  // ternaries embedded in this statement's expression
  std::vector<GenStmt> body;
  std::vector<GenStmt> else_body;
};

struct GenCallable {
  enum Kind { kFunction, kModifier, kConstructor };
  Kind kind = kFunction;
  std::string name;
  std::vector<GenStmt> body;
};

struct GenContract {
  std::string name;
  std::vector<GenCallable> callables;
};

struct GenUnit {
  std::vector<GenContract> contracts;

  std::string Render() const;
  // Bodies + if/for/while/do/ternary count (+ requires when asked),
  // counted on the generator's own model.
  long ExpectedComplexity(bool require_branches = false) const;
  std::size_t BodyCount() const;
  // Inserts `if (flag) { counter += 1; }` into a randomly chosen block.
  // Returns false when the unit has no callable.
  bool InsertIf(std::mt19937_64& rng);
};

struct GenOptions {
  int max_depth = 5;
  int max_contracts = 3;
  int max_callables = 4;
  int max_stmts = 4;
};

GenUnit GenerateUnit(std::mt19937_64& rng, const GenOptions& options = {});

}  // namespace oraclescan::testing

#endif  // ORACLESCAN_TESTS_GENERATOR_HPP_
