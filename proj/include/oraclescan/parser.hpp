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

#ifndef ORACLESCAN_PARSER_HPP_
#define ORACLESCAN_PARSER_HPP_

#include <span>
#include <string>
#include <vector>

#include "oraclescan/ast.hpp"
#include "oraclescan/token.hpp"

namespace oraclescan {

struct ParseDiagnostic {
  std::string message;
  Span span;
};

struct ParseResult {
  AstNode root;  // always kind SourceUnit
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Recursive-descent parser for the supported Solidity subset. A syntax error
// inside a top-level definition drops that definition, records one
// diagnostic and resumes at the next `contract`, `interface`, `library` or
// `abstract` keyword. Comment tokens are ignored.
ParseResult Parse(std::span<const Token> tokens);

inline ParseResult ParseSource(const SourceFile& file) {
  return Parse(Tokenize(file));
}

}  // namespace oraclescan

#endif  // ORACLESCAN_PARSER_HPP_
