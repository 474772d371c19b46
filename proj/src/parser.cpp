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

#include "oraclescan/parser.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace oraclescan {
namespace {

struct SyntaxError {
  std::string message;
  Span span;
};

constexpr int kMaxDepth = 200;

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<=", ">>=", ">>>="};

// Binary operator precedence, higher binds tighter; 0 = not binary.
int BinaryPrecedence(const Token& t) {
  if (t.kind != TokenKind::kPunct) return 0;
  const std::string_view op = t.lexeme;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
  if (op == "|") return 5;
  if (op == "^") return 6;
  if (op == "&") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  if (op == "**") return 11;
  return 0;
}

bool IsFunctionSpecifier(std::string_view word) {
  return word == "public" || word == "private" || word == "internal" ||
         word == "external" || word == "pure" || word == "view" ||
         word == "payable" || word == "virtual" || word == "constant";
}

bool IsStateVarSpecifier(std::string_view word) {
  return word == "public" || word == "private" || word == "internal" ||
         word == "constant" || word == "immutable" || word == "transient";
}

bool IsDataLocation(std::string_view word) {
  return word == "memory" || word == "storage" || word == "calldata";
}

bool IsSubdenomination(std::string_view word) {
  return word == "wei" || word == "gwei" || word == "ether" ||
         word == "seconds" || word == "minutes" || word == "hours" ||
         word == "days" || word == "weeks" || word == "years";
}

void AppendWord(std::string& text, std::string_view word) {
  if (!text.empty()) text.push_back(' ');
  text.append(word);
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) {
    for (const Token& t : tokens) {
      if (t.kind != TokenKind::kComment) tokens_.push_back(t);
    }
    Token eof{TokenKind::kPunct, "", 1, 1, 0, 1, 1};
    if (!tokens.empty()) {
      eof.line = eof.end_line = tokens.back().end_line;
      eof.column = eof.end_column = tokens.back().end_column;
      eof.offset = tokens.back().offset + tokens.back().lexeme.size();
    }
    eof_ = eof;
  }

  ParseResult Run() {
    ParseResult result;
    result.root.kind = NodeKind::kSourceUnit;
    while (!AtEnd()) {
      const std::size_t start = pos_;
      try {
        if (auto def = ParseTopLevel()) {
          result.root.children.push_back(std::move(*def));
        }
      } catch (const SyntaxError& error) {
        result.diagnostics.push_back({error.message, error.span});
        pos_ = start + 1;
        while (!AtEnd() && !IsTopLevelKeyword(Peek())) ++pos_;
      }
    }
    if (tokens_.empty()) {
      result.root.span = {};
    } else {
      result.root.span = {{tokens_.front().line, tokens_.front().column},
                          {tokens_.back().end_line, tokens_.back().end_column}};
    }
    return result;
  }

 private:
  // ---- token helpers ----

  bool AtEnd() const { return pos_ >= tokens_.size(); }

  const Token& Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof_;
  }

  const Token& Next() {
    const Token& t = Peek();
    if (!AtEnd()) ++pos_;
    return t;
  }

  static bool IsTopLevelKeyword(const Token& t) {
    return t.IsKeyword("contract") || t.IsKeyword("interface") ||
           t.IsKeyword("library") || t.IsKeyword("abstract");
  }

  static SourcePos StartOf(const Token& t) { return {t.line, t.column}; }
  static SourcePos EndOf(const Token& t) { return {t.end_line, t.end_column}; }

  [[noreturn]] void Fail(std::string_view expected) const {
    const Token& t = Peek();
    std::string message = "expected " + std::string(expected) + " but found ";
    message += AtEnd() ? std::string("end of input")
                       : "'" + t.lexeme + "'";
    throw SyntaxError{std::move(message), {StartOf(t), EndOf(t)}};
  }

  bool AcceptPunct(std::string_view p) {
    if (Peek().IsPunct(p)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool AcceptKeyword(std::string_view k) {
    if (Peek().IsKeyword(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void ExpectPunct(std::string_view p) {
    if (!AcceptPunct(p)) Fail("'" + std::string(p) + "'");
  }

  void ExpectKeyword(std::string_view k) {
    if (!AcceptKeyword(k)) Fail("'" + std::string(k) + "'");
  }

  std::string ExpectIdentifier() {
    if (Peek().kind != TokenKind::kIdentifier) Fail("identifier");
    return Next().lexeme;
  }

  Span SpanFrom(std::size_t first) const {
    if (first >= pos_) {
      const SourcePos at =
          first < tokens_.size() ? StartOf(tokens_[first]) : StartOf(eof_);
      return {at, at};
    }
    return {StartOf(tokens_[first]), EndOf(tokens_[pos_ - 1])};
  }

  AstNode Make(NodeKind kind, std::size_t first,
               std::optional<std::string> name = std::nullopt,
               std::vector<AstNode> children = {}, std::string text = {}) {
    AstNode node;
    node.kind = kind;
    node.name = std::move(name);
    node.children = std::move(children);
    node.text = std::move(text);
    node.span = SpanFrom(first);
    return node;
  }

  AstNode Empty() {
    AstNode node;
    node.kind = NodeKind::kOther;
    node.name = "empty";
    node.span = SpanFrom(pos_);
    return node;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (parser.depth_ >= kMaxDepth) parser.Fail("shallower nesting");
      ++parser.depth_;
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  void SkipBalanced(std::string_view open, std::string_view close) {
    ExpectPunct(open);
    int depth = 1;
    while (depth > 0) {
      if (AtEnd()) Fail("'" + std::string(close) + "'");
      const Token& t = Next();
      if (t.IsPunct(open)) ++depth;
      if (t.IsPunct(close)) --depth;
    }
  }

  void SkipThroughSemicolon() {
    while (!Peek().IsPunct(";")) {
      if (AtEnd()) Fail("';'");
      ++pos_;
    }
    ++pos_;
  }

  // ---- definitions ----

  std::optional<AstNode> ParseTopLevel() {
    const Token& t = Peek();
    if (t.IsKeyword("pragma") || t.IsKeyword("import")) {
      SkipThroughSemicolon();
      return std::nullopt;
    }
    if (IsTopLevelKeyword(t)) return ParseContract();
    if (t.kind == TokenKind::kErrorChar) Fail("definition");
    return ParseMember();
  }

  AstNode ParseContract() {
    const std::size_t first = pos_;
    std::string specifiers;
    if (AcceptKeyword("abstract")) specifiers = "abstract";
    NodeKind kind;
    if (AcceptKeyword("contract")) {
      kind = NodeKind::kContractDef;
    } else if (AcceptKeyword("interface")) {
      kind = NodeKind::kInterfaceDef;
    } else if (AcceptKeyword("library")) {
      kind = NodeKind::kLibraryDef;
    } else {
      Fail("'contract', 'interface' or 'library'");
    }
    std::string name = ExpectIdentifier();
    std::vector<AstNode> children;
    if (AcceptKeyword("is")) {
      do {
        children.push_back(ParseModifierInvocation());
      } while (AcceptPunct(","));
    }
    ExpectPunct("{");
    while (!AcceptPunct("}")) {
      if (AtEnd()) Fail("'}'");
      children.push_back(ParseMember());
    }
    return Make(kind, first, std::move(name), std::move(children),
                std::move(specifiers));
  }

  AstNode ParseMember() {
    const Token& t = Peek();
    if (t.IsKeyword("function")) return ParseFunction();
    if (t.IsKeyword("constructor")) return ParseConstructor();
    if (t.IsKeyword("modifier")) return ParseModifier();
    if (t.IsKeyword("event")) return ParseEvent();
    if (t.IsKeyword("struct")) return ParseStruct();
    if (t.IsKeyword("enum")) return ParseEnum();
    if (t.IsKeyword("using")) {
      const std::size_t first = pos_;
      SkipThroughSemicolon();
      return Make(NodeKind::kOther, first, "using");
    }
    if (t.kind == TokenKind::kIdentifier &&
        (t.lexeme == "fallback" || t.lexeme == "receive") &&
        Peek(1).IsPunct("(")) {
      return ParseFunction();
    }
    if (t.kind == TokenKind::kIdentifier && t.lexeme == "error" &&
        Peek(1).kind == TokenKind::kIdentifier && Peek(2).IsPunct("(")) {
      const std::size_t first = pos_;
      ++pos_;
      std::string name = ExpectIdentifier();
      std::vector<AstNode> params = ParseParameterList("");
      ExpectPunct(";");
      return Make(NodeKind::kOther, first, std::move(name), std::move(params),
                  "error");
    }
    if (t.IsKeyword("type") && Peek(1).kind == TokenKind::kIdentifier &&
        Peek(2).IsKeyword("is")) {
      const std::size_t first = pos_;
      SkipThroughSemicolon();
      return Make(NodeKind::kOther, first, "user_type");
    }
    return ParseStateVar();
  }

  AstNode ParseFunction() {
    const std::size_t first = pos_;
    std::string name;
    if (AcceptKeyword("function")) {
      if (Peek().kind == TokenKind::kIdentifier) {
        name = Next().lexeme;
      } else {
        name = "fallback";  // pre-0.6 unnamed fallback
      }
    } else {
      name = Next().lexeme;  // fallback / receive
    }
    std::vector<AstNode> children = ParseParameterList("");
    std::string specifiers;
    ParseCallableHeader(children, specifiers);
    if (!AcceptPunct(";")) children.push_back(ParseBlock());
    return Make(NodeKind::kFunctionDef, first, std::move(name),
                std::move(children), std::move(specifiers));
  }

  AstNode ParseConstructor() {
    const std::size_t first = pos_;
    ExpectKeyword("constructor");
    std::vector<AstNode> children = ParseParameterList("");
    std::string specifiers;
    ParseCallableHeader(children, specifiers);
    children.push_back(ParseBlock());
    return Make(NodeKind::kConstructorDef, first, std::nullopt,
                std::move(children), std::move(specifiers));
  }

  AstNode ParseModifier() {
    const std::size_t first = pos_;
    ExpectKeyword("modifier");
    std::string name = ExpectIdentifier();
    std::vector<AstNode> children;
    if (Peek().IsPunct("(")) children = ParseParameterList("");
    std::string specifiers;
    while (true) {
      if (AcceptKeyword("virtual")) {
        AppendWord(specifiers, "virtual");
      } else if (Peek().IsKeyword("override")) {
        ParseOverride(specifiers);
      } else {
        break;
      }
    }
    if (!AcceptPunct(";")) children.push_back(ParseBlock());
    return Make(NodeKind::kModifierDef, first, std::move(name),
                std::move(children), std::move(specifiers));
  }

  // Specifiers, modifier invocations and `returns (...)` after a parameter
  // list, up to (not including) the body or `;`.
  void ParseCallableHeader(std::vector<AstNode>& children,
                           std::string& specifiers) {
    while (!Peek().IsPunct("{") && !Peek().IsPunct(";")) {
      const Token& t = Peek();
      if (t.kind == TokenKind::kKeyword && IsFunctionSpecifier(t.lexeme)) {
        AppendWord(specifiers, Next().lexeme);
      } else if (t.IsKeyword("override")) {
        ParseOverride(specifiers);
      } else if (t.IsKeyword("returns")) {
        ++pos_;
        for (AstNode& p : ParseParameterList("return")) {
          children.push_back(std::move(p));
        }
      } else if (t.kind == TokenKind::kIdentifier) {
        children.push_back(ParseModifierInvocation());
      } else {
        Fail("'{' or ';'");
      }
    }
  }

  void ParseOverride(std::string& specifiers) {
    ExpectKeyword("override");
    AppendWord(specifiers, "override");
    if (Peek().IsPunct("(")) SkipBalanced("(", ")");
  }

  // `Name`, `A.B` or `Name(args)`; also used for inheritance specifiers.
  AstNode ParseModifierInvocation() {
    const std::size_t first = pos_;
    std::string path = ExpectIdentifier();
    while (AcceptPunct(".")) path += "." + ExpectIdentifier();
    AstNode callee = Make(NodeKind::kIdentifier, first, std::move(path));
    if (!Peek().IsPunct("(")) return callee;
    std::vector<AstNode> children;
    children.push_back(std::move(callee));
    for (AstNode& arg : ParseCallArguments()) children.push_back(std::move(arg));
    return Make(NodeKind::kFunctionCall, first, std::nullopt,
                std::move(children));
  }

  AstNode ParseEvent() {
    const std::size_t first = pos_;
    ExpectKeyword("event");
    std::string name = ExpectIdentifier();
    std::vector<AstNode> params = ParseParameterList("");
    std::string specifiers;
    if (AcceptKeyword("anonymous")) specifiers = "anonymous";
    ExpectPunct(";");
    return Make(NodeKind::kEventDef, first, std::move(name), std::move(params),
                std::move(specifiers));
  }

  AstNode ParseStruct() {
    const std::size_t first = pos_;
    ExpectKeyword("struct");
    std::string name = ExpectIdentifier();
    ExpectPunct("{");
    std::vector<AstNode> fields;
    while (!AcceptPunct("}")) {
      const std::size_t field_first = pos_;
      AstNode type = ParseType();
      std::string field = ExpectIdentifier();
      ExpectPunct(";");
      std::vector<AstNode> type_child;
      type_child.push_back(std::move(type));
      fields.push_back(Make(NodeKind::kParamDecl, field_first,
                            std::move(field), std::move(type_child)));
    }
    return Make(NodeKind::kOther, first, std::move(name), std::move(fields),
                "struct");
  }

  AstNode ParseEnum() {
    const std::size_t first = pos_;
    ExpectKeyword("enum");
    std::string name = ExpectIdentifier();
    ExpectPunct("{");
    std::vector<AstNode> values;
    if (!Peek().IsPunct("}")) {
      do {
        const std::size_t value_first = pos_;
        values.push_back(
            Make(NodeKind::kIdentifier, value_first, ExpectIdentifier()));
      } while (AcceptPunct(","));
    }
    ExpectPunct("}");
    return Make(NodeKind::kOther, first, std::move(name), std::move(values),
                "enum");
  }

  AstNode ParseStateVar() {
    const std::size_t first = pos_;
    std::vector<AstNode> children;
    children.push_back(ParseType());
    std::string specifiers;
    while (true) {
      const Token& t = Peek();
      if (t.kind == TokenKind::kKeyword && IsStateVarSpecifier(t.lexeme)) {
        AppendWord(specifiers, Next().lexeme);
      } else if (t.kind == TokenKind::kIdentifier && t.lexeme == "transient" &&
                 Peek(1).kind == TokenKind::kIdentifier) {
        AppendWord(specifiers, Next().lexeme);
      } else if (t.IsKeyword("override")) {
        ParseOverride(specifiers);
      } else {
        break;
      }
    }
    std::string name = ExpectIdentifier();
    if (AcceptPunct("=")) children.push_back(ParseExpression());
    ExpectPunct(";");
    return Make(NodeKind::kStateVarDecl, first, std::move(name),
                std::move(children), std::move(specifiers));
  }

  // `(` [param {, param}] `)`. `role` goes into each ParamDecl's text
  // together with location/indexed keywords.
  std::vector<AstNode> ParseParameterList(std::string_view role) {
    ExpectPunct("(");
    std::vector<AstNode> params;
    if (AcceptPunct(")")) return params;
    do {
      const std::size_t first = pos_;
      std::vector<AstNode> type;
      type.push_back(ParseType());
      std::string text(role);
      while (Peek().kind == TokenKind::kKeyword &&
             (IsDataLocation(Peek().lexeme) || Peek().lexeme == "indexed")) {
        AppendWord(text, Next().lexeme);
      }
      std::optional<std::string> name;
      if (Peek().kind == TokenKind::kIdentifier) name = Next().lexeme;
      params.push_back(Make(NodeKind::kParamDecl, first, std::move(name),
                            std::move(type), std::move(text)));
    } while (AcceptPunct(","));
    ExpectPunct(")");
    return params;
  }

  // ---- types ----

  bool AtElementaryType() const {
    const Token& t = Peek();
    return t.kind == TokenKind::kKeyword && IsElementaryTypeName(t.lexeme);
  }

  AstNode ParseType() {
    DepthGuard guard(*this);
    const std::size_t first = pos_;
    AstNode type;
    if (AcceptKeyword("mapping")) {
      ExpectPunct("(");
      std::vector<AstNode> children;
      children.push_back(ParseType());
      if (Peek().kind == TokenKind::kIdentifier) ++pos_;
      ExpectPunct("=>");
      children.push_back(ParseType());
      if (Peek().kind == TokenKind::kIdentifier) ++pos_;
      ExpectPunct(")");
      type = Make(NodeKind::kMappingType, first, std::nullopt,
                  std::move(children));
    } else if (AcceptKeyword("function")) {
      std::vector<AstNode> children = ParseParameterList("");
      std::string specifiers;
      while (true) {
        const Token& t = Peek();
        if (t.kind == TokenKind::kKeyword && IsFunctionSpecifier(t.lexeme)) {
          AppendWord(specifiers, Next().lexeme);
        } else if (AcceptKeyword("returns")) {
          for (AstNode& p : ParseParameterList("return")) {
            children.push_back(std::move(p));
          }
        } else {
          break;
        }
      }
      type = Make(NodeKind::kOther, first, "function_type",
                  std::move(children), std::move(specifiers));
    } else if (AtElementaryType()) {
      std::string name = Next().lexeme;
      if (name == "address" && AcceptKeyword("payable")) name += " payable";
      type = Make(NodeKind::kElementaryType, first, std::move(name));
    } else if (Peek().kind == TokenKind::kIdentifier) {
      std::string path = Next().lexeme;
      while (Peek().IsPunct(".") && Peek(1).kind == TokenKind::kIdentifier) {
        pos_ += 1;
        path += "." + Next().lexeme;
      }
      type = Make(NodeKind::kIdentifier, first, std::move(path));
    } else {
      Fail("type name");
    }
    while (AcceptPunct("[")) {
      std::vector<AstNode> children;
      children.push_back(std::move(type));
      if (!Peek().IsPunct("]")) children.push_back(ParseExpression());
      ExpectPunct("]");
      type = Make(NodeKind::kOther, first, "array", std::move(children));
    }
    return type;
  }

  // ---- statements ----

  AstNode ParseBlock() {
    const std::size_t first = pos_;
    ExpectPunct("{");
    std::vector<AstNode> statements;
    while (!AcceptPunct("}")) {
      if (AtEnd()) Fail("'}'");
      statements.push_back(ParseStatement());
    }
    return Make(NodeKind::kBlock, first, std::nullopt, std::move(statements));
  }

  AstNode ParseStatement() {
    DepthGuard guard(*this);
    const std::size_t first = pos_;
    const Token& t = Peek();
    if (t.IsPunct("{")) return ParseBlock();
    if (t.IsKeyword("if")) {
      ++pos_;
      ExpectPunct("(");
      std::vector<AstNode> children;
      children.push_back(ParseExpression());
      ExpectPunct(")");
      children.push_back(ParseStatement());
      if (AcceptKeyword("else")) children.push_back(ParseStatement());
      return Make(NodeKind::kIfStmt, first, std::nullopt, std::move(children));
    }
    if (t.IsKeyword("for")) {
      ++pos_;
      ExpectPunct("(");
      std::vector<AstNode> children;
      if (Peek().IsPunct(";")) {
        children.push_back(Empty());
        ++pos_;
      } else {
        children.push_back(ParseSimpleStatement());
      }
      children.push_back(Peek().IsPunct(";") ? Empty() : ParseExpression());
      ExpectPunct(";");
      children.push_back(Peek().IsPunct(")") ? Empty() : ParseExpression());
      ExpectPunct(")");
      children.push_back(ParseStatement());
      return Make(NodeKind::kForStmt, first, std::nullopt, std::move(children));
    }
    if (t.IsKeyword("while")) {
      ++pos_;
      ExpectPunct("(");
      std::vector<AstNode> children;
      children.push_back(ParseExpression());
      ExpectPunct(")");
      children.push_back(ParseStatement());
      return Make(NodeKind::kWhileStmt, first, std::nullopt,
                  std::move(children));
    }
    if (t.IsKeyword("do")) {
      ++pos_;
      std::vector<AstNode> children;
      children.push_back(ParseStatement());
      ExpectKeyword("while");
      ExpectPunct("(");
      children.push_back(ParseExpression());
      ExpectPunct(")");
      ExpectPunct(";");
      return Make(NodeKind::kDoWhileStmt, first, std::nullopt,
                  std::move(children));
    }
    if (t.IsKeyword("return")) {
      ++pos_;
      std::vector<AstNode> children;
      if (!Peek().IsPunct(";")) children.push_back(ParseExpression());
      ExpectPunct(";");
      return Make(NodeKind::kReturnStmt, first, std::nullopt,
                  std::move(children));
    }
    if (t.IsKeyword("emit")) {
      ++pos_;
      std::vector<AstNode> children;
      children.push_back(ParseExpression());
      ExpectPunct(";");
      return Make(NodeKind::kEmitStmt, first, std::nullopt,
                  std::move(children));
    }
    if (t.kind == TokenKind::kIdentifier &&
        (t.lexeme == "require" || t.lexeme == "assert" ||
         t.lexeme == "revert") &&
        (Peek(1).IsPunct("(") ||
         (t.lexeme == "revert" && Peek(1).kind == TokenKind::kIdentifier))) {
      std::string name = Next().lexeme;
      std::vector<AstNode> children;
      if (Peek().IsPunct("(")) {
        children = ParseCallArguments();
      } else {
        children.push_back(ParseExpression());  // revert CustomError(...)
      }
      ExpectPunct(";");
      return Make(NodeKind::kRequireCall, first, std::move(name),
                  std::move(children));
    }
    if (t.IsKeyword("unchecked") && Peek(1).IsPunct("{")) {
      ++pos_;
      std::vector<AstNode> children;
      children.push_back(ParseBlock());
      return Make(NodeKind::kOther, first, "unchecked", std::move(children));
    }
    if (t.IsKeyword("assembly")) {
      ++pos_;
      if (Peek().kind == TokenKind::kStringLit) ++pos_;
      if (Peek().IsPunct("(")) SkipBalanced("(", ")");
      SkipBalanced("{", "}");
      return Make(NodeKind::kOther, first, "assembly");
    }
    if (t.IsKeyword("try")) return ParseTry();
    if (t.IsKeyword("break") || t.IsKeyword("continue") ||
        t.IsKeyword("throw")) {
      std::string name = Next().lexeme;
      ExpectPunct(";");
      return Make(NodeKind::kOther, first, std::move(name));
    }
    return ParseSimpleStatement();
  }

  AstNode ParseTry() {
    const std::size_t first = pos_;
    ExpectKeyword("try");
    std::vector<AstNode> children;
    children.push_back(ParseExpression());
    if (AcceptKeyword("returns")) {
      for (AstNode& p : ParseParameterList("return")) {
        children.push_back(std::move(p));
      }
    }
    children.push_back(ParseBlock());
    if (!Peek().IsKeyword("catch")) Fail("'catch'");
    while (AcceptKeyword("catch")) {
      if (Peek().kind == TokenKind::kIdentifier) ++pos_;
      if (Peek().IsPunct("(")) {
        for (AstNode& p : ParseParameterList("")) {
          children.push_back(std::move(p));
        }
      }
      children.push_back(ParseBlock());
    }
    return Make(NodeKind::kOther, first, "try", std::move(children));
  }

  // Variable declaration or expression statement, including the `;`.
  AstNode ParseSimpleStatement() {
    const std::size_t first = pos_;
    if (auto decl = TryParseVarDecl()) return std::move(*decl);
    pos_ = first;
    std::vector<AstNode> children;
    children.push_back(ParseExpression());
    ExpectPunct(";");
    return Make(NodeKind::kExprStmt, first, std::nullopt, std::move(children));
  }

  std::optional<AstNode> TryParseVarDecl() {
    const std::size_t first = pos_;
    const Token& t = Peek();
    const bool plausible = t.kind == TokenKind::kIdentifier ||
                           t.IsKeyword("mapping") || t.IsKeyword("var") ||
                           AtElementaryType() || t.IsPunct("(");
    if (!plausible) return std::nullopt;
    try {
      std::vector<AstNode> children;
      if (AcceptPunct("(")) {
        // Tuple declaration: (T a, , T b) = expr;
        bool declared_any = false;
        while (true) {
          if (!Peek().IsPunct(",") && !Peek().IsPunct(")")) {
            children.push_back(ParseLocalDeclaration());
            declared_any = true;
          }
          if (AcceptPunct(")")) break;
          ExpectPunct(",");
        }
        if (!declared_any) Fail("declaration");
        ExpectPunct("=");
        children.push_back(ParseExpression());
      } else {
        children.push_back(ParseLocalDeclaration());
        if (AcceptPunct("=")) children.push_back(ParseExpression());
      }
      ExpectPunct(";");
      return Make(NodeKind::kVarDeclStmt, first, std::nullopt,
                  std::move(children));
    } catch (const SyntaxError&) {
      pos_ = first;
      return std::nullopt;
    }
  }

  AstNode ParseLocalDeclaration() {
    const std::size_t first = pos_;
    std::vector<AstNode> type;
    if (Peek().IsKeyword("var")) {
      ++pos_;
      type.push_back(Make(NodeKind::kElementaryType, first, "var"));
    } else {
      type.push_back(ParseType());
    }
    std::string text;
    while (Peek().kind == TokenKind::kKeyword && IsDataLocation(Peek().lexeme)) {
      AppendWord(text, Next().lexeme);
    }
    std::string name = ExpectIdentifier();
    return Make(NodeKind::kParamDecl, first, std::move(name), std::move(type),
                std::move(text));
  }

  // ---- expressions ----

  AstNode ParseExpression() {
    DepthGuard guard(*this);
    const std::size_t first = pos_;
    AstNode lhs = ParseTernary();
    const Token& t = Peek();
    if (t.kind == TokenKind::kPunct) {
      for (std::string_view op : kAssignOps) {
        if (t.lexeme == op) {
          ++pos_;
          std::vector<AstNode> children;
          children.push_back(std::move(lhs));
          children.push_back(ParseExpression());
          return Make(NodeKind::kAssignment, first, std::nullopt,
                      std::move(children), std::string(op));
        }
      }
    }
    return lhs;
  }

  AstNode ParseTernary() {
    const std::size_t first = pos_;
    AstNode condition = ParseBinary(1);
    if (!AcceptPunct("?")) return condition;
    DepthGuard guard(*this);
    std::vector<AstNode> children;
    children.push_back(std::move(condition));
    children.push_back(ParseTernary());
    ExpectPunct(":");
    children.push_back(ParseTernary());
    return Make(NodeKind::kTernary, first, std::nullopt, std::move(children));
  }

  AstNode ParseBinary(int min_precedence) {
    const std::size_t first = pos_;
    AstNode lhs = ParseUnary();
    while (true) {
      const int precedence = BinaryPrecedence(Peek());
      if (precedence == 0 || precedence < min_precedence) break;
      std::string op = Next().lexeme;
      // ** is right-associative.
      AstNode rhs = ParseBinary(op == "**" ? precedence : precedence + 1);
      std::vector<AstNode> children;
      children.push_back(std::move(lhs));
      children.push_back(std::move(rhs));
      lhs = Make(NodeKind::kOther, first, "binary", std::move(children),
                 std::move(op));
    }
    return lhs;
  }

  AstNode ParseUnary() {
    DepthGuard guard(*this);
    const std::size_t first = pos_;
    const Token& t = Peek();
    if ((t.kind == TokenKind::kPunct &&
         (t.lexeme == "!" || t.lexeme == "~" || t.lexeme == "-" ||
          t.lexeme == "+" || t.lexeme == "++" || t.lexeme == "--")) ||
        t.IsKeyword("delete")) {
      std::string op = Next().lexeme;
      std::vector<AstNode> children;
      children.push_back(ParseUnary());
      return Make(NodeKind::kOther, first, "unary", std::move(children),
                  std::move(op));
    }
    return ParsePostfix();
  }

  std::vector<AstNode> ParseCallArguments() {
    ExpectPunct("(");
    std::vector<AstNode> args;
    if (AcceptPunct(")")) return args;
    if (Peek().IsPunct("{")) {
      const std::size_t first = pos_;
      args.push_back(
          Make(NodeKind::kOther, first, "named_args", ParseNamedArguments()));
      ExpectPunct(")");
      return args;
    }
    do {
      args.push_back(ParseExpression());
    } while (AcceptPunct(","));
    ExpectPunct(")");
    return args;
  }

  // `{ name: expr, ... }`, returns the value expressions.
  std::vector<AstNode> ParseNamedArguments() {
    ExpectPunct("{");
    std::vector<AstNode> values;
    if (!Peek().IsPunct("}")) {
      do {
        ExpectIdentifier();
        ExpectPunct(":");
        values.push_back(ParseExpression());
      } while (AcceptPunct(","));
    }
    ExpectPunct("}");
    return values;
  }

  AstNode ParsePostfix() {
    const std::size_t first = pos_;
    AstNode expr = ParsePrimary();
    while (true) {
      if (AcceptPunct(".")) {
        const Token& member = Peek();
        if (member.kind != TokenKind::kIdentifier &&
            member.kind != TokenKind::kKeyword) {
          Fail("member name");
        }
        std::string name = Next().lexeme;
        std::vector<AstNode> children;
        children.push_back(std::move(expr));
        expr = Make(NodeKind::kMemberAccess, first, std::move(name),
                    std::move(children));
      } else if (AcceptPunct("[")) {
        std::vector<AstNode> children;
        children.push_back(std::move(expr));
        std::string text;
        if (!Peek().IsPunct("]") && !Peek().IsPunct(":")) {
          children.push_back(ParseExpression());
        }
        if (AcceptPunct(":")) {
          text = ":";
          if (!Peek().IsPunct("]")) children.push_back(ParseExpression());
        }
        ExpectPunct("]");
        expr = Make(NodeKind::kOther, first, "index", std::move(children),
                    std::move(text));
      } else if (Peek().IsPunct("(")) {
        std::vector<AstNode> children;
        children.push_back(std::move(expr));
        for (AstNode& arg : ParseCallArguments()) {
          children.push_back(std::move(arg));
        }
        expr = Make(NodeKind::kFunctionCall, first, std::nullopt,
                    std::move(children));
      } else if (Peek().IsPunct("{") &&
                 Peek(1).kind == TokenKind::kIdentifier &&
                 Peek(2).IsPunct(":")) {
        std::vector<AstNode> children;
        children.push_back(std::move(expr));
        for (AstNode& v : ParseNamedArguments()) children.push_back(std::move(v));
        expr = Make(NodeKind::kOther, first, "call_options",
                    std::move(children));
      } else if (Peek().IsPunct("++") || Peek().IsPunct("--")) {
        std::string op = Next().lexeme;
        std::vector<AstNode> children;
        children.push_back(std::move(expr));
        expr = Make(NodeKind::kOther, first, "postfix", std::move(children),
                    std::move(op));
      } else {
        return expr;
      }
    }
  }

  AstNode ParsePrimary() {
    const std::size_t first = pos_;
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIdentifier:
        return Make(NodeKind::kIdentifier, first, Next().lexeme);
      case TokenKind::kNumberLit: {
        std::string text = Next().lexeme;
        if (Peek().kind == TokenKind::kKeyword &&
            IsSubdenomination(Peek().lexeme)) {
          text += " " + Next().lexeme;
        }
        return Make(NodeKind::kLiteral, first, std::nullopt, {},
                    std::move(text));
      }
      case TokenKind::kStringLit: {
        std::string text = Next().lexeme;
        while (Peek().kind == TokenKind::kStringLit) {
          text += " " + Next().lexeme;
        }
        return Make(NodeKind::kLiteral, first, std::nullopt, {},
                    std::move(text));
      }
      default:
        break;
    }
    if (t.IsKeyword("true") || t.IsKeyword("false")) {
      return Make(NodeKind::kLiteral, first, std::nullopt, {}, Next().lexeme);
    }
    if (AcceptPunct("(")) {
      std::vector<AstNode> items;
      bool tuple = false;
      while (true) {
        if (!Peek().IsPunct(",") && !Peek().IsPunct(")")) {
          items.push_back(ParseExpression());
        }
        if (AcceptPunct(")")) break;
        ExpectPunct(",");
        tuple = true;
      }
      if (!tuple && items.size() == 1) return std::move(items.front());
      return Make(NodeKind::kOther, first, "tuple", std::move(items));
    }
    if (AcceptPunct("[")) {
      std::vector<AstNode> items;
      if (!Peek().IsPunct("]")) {
        do {
          items.push_back(ParseExpression());
        } while (AcceptPunct(","));
      }
      ExpectPunct("]");
      return Make(NodeKind::kOther, first, "array_literal", std::move(items));
    }
    if (AtElementaryType()) {
      std::string name = Next().lexeme;
      if (name == "address" && AcceptKeyword("payable")) name += " payable";
      AstNode type = Make(NodeKind::kElementaryType, first, std::move(name));
      // `uint[]` / `bytes32[2]` used as expressions, e.g. in abi.decode.
      while (Peek().IsPunct("[") && (Peek(1).IsPunct("]") ||
                                     (Peek(1).kind == TokenKind::kNumberLit &&
                                      Peek(2).IsPunct("]")))) {
        ++pos_;
        std::vector<AstNode> children;
        children.push_back(std::move(type));
        if (!Peek().IsPunct("]")) children.push_back(ParsePrimary());
        ExpectPunct("]");
        type = Make(NodeKind::kOther, first, "array", std::move(children));
      }
      return type;
    }
    if (t.IsKeyword("payable")) {
      return Make(NodeKind::kIdentifier, first, Next().lexeme);
    }
    if (AcceptKeyword("new")) {
      std::vector<AstNode> children;
      children.push_back(ParseType());
      return Make(NodeKind::kOther, first, "new", std::move(children));
    }
    if (t.IsKeyword("type") && Peek(1).IsPunct("(")) {
      AstNode callee = Make(NodeKind::kIdentifier, first, Next().lexeme);
      ExpectPunct("(");
      std::vector<AstNode> children;
      children.push_back(std::move(callee));
      children.push_back(ParseType());
      ExpectPunct(")");
      return Make(NodeKind::kFunctionCall, first, std::nullopt,
                  std::move(children));
    }
    Fail("expression");
  }

  std::vector<Token> tokens_;
  Token eof_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

ParseResult Parse(std::span<const Token> tokens) {
  return Parser(tokens).Run();
}

}  // namespace oraclescan
