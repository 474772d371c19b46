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
#include <array>
#include <charconv>
#include <string_view>
#include <unordered_set>

#include "oraclescan/token.hpp"

namespace oraclescan {
namespace {

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$';
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsHexDigit(unsigned char c) {
  return IsDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Longest first within each leading character.
constexpr std::array<std::string_view, 33> kPuncts = {
    ">>>=", "<<=", ">>=", ">>>", "**", "=>", "==", "!=", "<=", ">=", "&&",
    "||",   "++",  "--",  "+=",  "-=", "*=", "/=", "%=", "|=", "&=", "^=",
    "<<",   ">>",  ":=",  "->",  "(",  ")",  "{",  "}",  "[",  "]",  ";"};

constexpr std::string_view kSinglePuncts = "(){}[];,.?:=+-*/%!~&|^<>@#";

// Length of a well-formed UTF-8 sequence starting at `text[pos]`, or 0.
std::size_t Utf8SequenceLength(std::string_view text, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  std::size_t len = 0;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0 && lead >= 0xC2) {
    len = 2;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
  } else if ((lead & 0xF8) == 0xF0 && lead <= 0xF4) {
    len = 4;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    if ((static_cast<unsigned char>(text[pos + i]) & 0xC0) != 0x80) return 0;
  }
  return len;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (IsSpace(c)) {
        Advance(1);
        continue;
      }
      const std::size_t start = pos_;
      const int line = line_;
      const int column = column_;
      const TokenKind kind = Scan();
      Token token{kind, std::string(text_.substr(start, pos_ - start)), line,
                  column, start, line_, column_};
      out.push_back(std::move(token));
    }
    return out;
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++column_;  // columns count code points
      }
    }
  }

  TokenKind Scan() {
    const char c = Peek();
    const auto uc = static_cast<unsigned char>(c);
    if (c == '/' && Peek(1) == '/') {
      while (pos_ < text_.size() && Peek() != '\n') Advance(1);
      return TokenKind::kComment;
    }
    if (c == '/' && Peek(1) == '*') {
      Advance(2);
      while (pos_ < text_.size() && !(Peek() == '*' && Peek(1) == '/')) {
        Advance(1);
      }
      Advance(2);  // unterminated comments run to end of input
      return TokenKind::kComment;
    }
    if (IsIdentStart(uc)) return ScanWord();
    if (IsDigit(uc) || (c == '.' && IsDigit(Peek(1)))) return ScanNumber();
    if (c == '"' || c == '\'') {
      return ScanString() ? TokenKind::kStringLit : TokenKind::kErrorChar;
    }
    for (std::string_view p : kPuncts) {
      if (text_.substr(pos_, p.size()) == p) {
        Advance(p.size());
        return TokenKind::kPunct;
      }
    }
    if (kSinglePuncts.find(c) != std::string_view::npos) {
      Advance(1);
      return TokenKind::kPunct;
    }
    const std::size_t len = Utf8SequenceLength(text_, pos_);
    Advance(len == 0 ? 1 : len);
    return TokenKind::kErrorChar;
  }

  TokenKind ScanWord() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentPart(Peek())) Advance(1);
    const std::string_view word = text_.substr(start, pos_ - start);
    // hex"..." and unicode"..." are single string literals.
    if ((word == "hex" || word == "unicode") &&
        (Peek() == '"' || Peek() == '\'')) {
      const std::size_t save_pos = pos_;
      const int save_line = line_, save_col = column_;
      if (ScanString()) return TokenKind::kStringLit;
      pos_ = save_pos;
      line_ = save_line;
      column_ = save_col;
    }
    return IsSolidityKeyword(word) ? TokenKind::kKeyword
                                   : TokenKind::kIdentifier;
  }

  TokenKind ScanNumber() {
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X')) {
      Advance(2);
      while (IsHexDigit(Peek()) || Peek() == '_') Advance(1);
      return TokenKind::kNumberLit;
    }
    while (IsDigit(Peek()) || Peek() == '_') Advance(1);
    if (Peek() == '.' && IsDigit(Peek(1))) {
      Advance(1);
      while (IsDigit(Peek()) || Peek() == '_') Advance(1);
    }
    if ((Peek() == 'e' || Peek() == 'E') &&
        (IsDigit(Peek(1)) || (Peek(1) == '-' && IsDigit(Peek(2))))) {
      Advance(2);
      while (IsDigit(Peek()) || Peek() == '_') Advance(1);
    }
    return TokenKind::kNumberLit;
  }

  // Consumes a quoted literal starting at the current quote. On a missing
  // closing quote only the opening quote is consumed and false is returned.
  bool ScanString() {
    const char quote = Peek();
    std::size_t i = pos_ + 1;
    while (i < text_.size()) {
      const char c = text_[i];
      if (c == '\\' && i + 1 < text_.size() && text_[i + 1] != '\n') {
        i += 2;
        continue;
      }
      if (c == '\n') break;
      if (c == quote) {
        Advance(i + 1 - pos_);
        return true;
      }
      ++i;
    }
    Advance(1);
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool IsSizedType(std::string_view word, std::string_view prefix, int min,
                 int max, int step) {
  if (!word.starts_with(prefix)) return false;
  const std::string_view digits = word.substr(prefix.size());
  if (digits.empty()) return true;
  if (digits.front() == '0') return false;
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc() && ptr == digits.data() + digits.size() &&
         value >= min && value <= max && value % step == 0;
}

}  // namespace

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "Identifier";
    case TokenKind::kKeyword: return "Keyword";
    case TokenKind::kPunct: return "Punct";
    case TokenKind::kNumberLit: return "NumberLit";
    case TokenKind::kStringLit: return "StringLit";
    case TokenKind::kComment: return "Comment";
    case TokenKind::kErrorChar: return "ErrorChar";
  }
  return "?";
}

bool IsElementaryTypeName(std::string_view word) {
  if (word == "bool" || word == "address" || word == "string" ||
      word == "bytes" || word == "byte" || word == "fixed" ||
      word == "ufixed") {
    return true;
  }
  if (word.starts_with("bytes")) return IsSizedType(word, "bytes", 1, 32, 1) &&
                                        word.size() > 5;
  if (word.starts_with("uint")) return IsSizedType(word, "uint", 8, 256, 8);
  if (word.starts_with("int")) return IsSizedType(word, "int", 8, 256, 8);
  return false;
}

bool IsSolidityKeyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kWords = {
      "abstract", "anonymous", "as", "assembly", "break", "catch",
      "constant", "constructor", "continue", "contract", "delete", "do",
      "else", "emit", "enum", "event", "external",
      "false", "for", "function", "if", "immutable", "import", "indexed",
      "interface", "internal", "is", "library", "mapping", "memory",
      "modifier", "new", "override", "payable", "pragma", "private",
      "public", "pure", "return", "returns", "storage",
      "calldata", "struct", "true", "try", "type", "unchecked", "using",
      "view", "virtual", "while", "wei", "gwei", "ether", "seconds",
      "minutes", "hours", "days", "weeks", "years", "throw", "var"};
  return kWords.contains(word) || IsElementaryTypeName(word);
}

std::vector<Token> Tokenize(std::string_view text) {
  return Lexer(text).Run();
}

std::vector<Token> Tokenize(const SourceFile& source) {
  return Tokenize(source.text);
}

}  // namespace oraclescan
