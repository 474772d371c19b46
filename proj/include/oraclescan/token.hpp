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

#ifndef ORACLESCAN_TOKEN_HPP_
#define ORACLESCAN_TOKEN_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oraclescan/source.hpp"

namespace oraclescan {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kPunct,
  kNumberLit,
  kStringLit,
  kComment,
  kErrorChar,
};

std::string_view ToString(TokenKind kind);

// Line and column are 1-based; columns count code points. `offset` is the
// byte offset of the first lexeme byte, so text.substr(offset, lexeme.size())
// always equals `lexeme`.
struct Token {
  TokenKind kind;
  std::string lexeme;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;

  // Position one byte past the last lexeme byte.
  int end_line = 1;
  int end_column = 1;

  bool Is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
  bool IsPunct(std::string_view text) const {
    return Is(TokenKind::kPunct, text);
  }
  bool IsKeyword(std::string_view text) const {
    return Is(TokenKind::kKeyword, text);
  }
};

// Reserved words of the supported subset, including elementary type names.
bool IsSolidityKeyword(std::string_view word);

// True for bool/address/string/bytes/bytesN/intN/uintN/fixed/ufixed.
bool IsElementaryTypeName(std::string_view word);

// Never fails: bytes that do not start a token become kErrorChar tokens
// (one per UTF-8 sequence, or one per byte when the sequence is invalid).
std::vector<Token> Tokenize(const SourceFile& source);
std::vector<Token> Tokenize(std::string_view text);

}  // namespace oraclescan

#endif  // ORACLESCAN_TOKEN_HPP_
