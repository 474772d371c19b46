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

#ifndef ORACLESCAN_AST_HPP_
#define ORACLESCAN_AST_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oraclescan {

struct SourcePos {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

// Half-open: `end` is one past the last byte covered.
struct Span {
  SourcePos start;
  SourcePos end;

  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class NodeKind {
  kSourceUnit,
  kContractDef,
  kInterfaceDef,
  kLibraryDef,
  kFunctionDef,
  kConstructorDef,
  kModifierDef,
  kEventDef,
  kStateVarDecl,
  kParamDecl,
  kBlock,
  kIfStmt,
  kForStmt,
  kWhileStmt,
  kDoWhileStmt,
  kReturnStmt,
  kEmitStmt,
  kExprStmt,
  kVarDeclStmt,
  kRequireCall,
  kFunctionCall,
  kMemberAccess,
  kIdentifier,
  kTernary,
  kAssignment,
  kLiteral,
  kMappingType,
  kElementaryType,
  kOther,
};

std::string_view ToString(NodeKind kind);

// Tree node of the parsed subset.
//
// `name` carries declared names (definitions, parameters), referenced names
// (Identifier, MemberAccess member, ElementaryType) and, for Other nodes, a
// short tag describing the construct ("binary", "index", "assembly", ...).
// `text` is auxiliary lexical payload: operator for Assignment and binary or
// unary Other nodes, literal text for Literal, space-separated specifiers for
// definitions and declarations, "return" on return-parameter ParamDecls.
//
// Child layout of the non-obvious kinds:
//   ContractDef     base Identifiers..., members...
//   FunctionDef     ParamDecl..., modifier invocations (Identifier or
//                   FunctionCall)..., Block body (absent when bodiless)
//   ModifierDef     ParamDecl..., Block body (absent when bodiless)
//   ParamDecl       type node
//   StateVarDecl    type node, optional initializer
//   VarDeclStmt     ParamDecl... (one per tuple slot that declares a name),
//                   optional initializer expression
//   IfStmt          condition, then, optional else
//   ForStmt         init, condition, post, body; absent parts are
//                   Other{name:"empty"}
//   WhileStmt       condition, body
//   DoWhileStmt     body, condition
//   FunctionCall    callee, arguments...
//   MemberAccess    object (name is the member)
//   Ternary         condition, when-true, when-false
//   Assignment      lhs, rhs
//   RequireCall     arguments... (name is require/assert/revert)
//   EmitStmt        FunctionCall
struct AstNode {
  NodeKind kind = NodeKind::kOther;
  std::optional<std::string> name;
  std::string text;
  std::vector<AstNode> children;
  Span span;

  bool Is(NodeKind k) const { return kind == k; }
  bool IsOther(std::string_view tag) const {
    return kind == NodeKind::kOther && name && *name == tag;
  }
  std::string_view NameOr(std::string_view fallback = {}) const {
    return name ? std::string_view(*name) : fallback;
  }

  // Body block of a FunctionDef/ConstructorDef/ModifierDef, or nullptr.
  const AstNode* Body() const;

  friend bool operator==(const AstNode&, const AstNode&) = default;
};

bool IsContractLike(NodeKind kind);  // contract, interface or library
bool IsCallableDef(NodeKind kind);   // function, constructor or modifier
bool IsStatement(NodeKind kind);

// Pre-order traversal; returning false from `visit` skips the subtree.
void Walk(const AstNode& node,
          const std::function<bool(const AstNode&)>& visit);

// Visits every node in the subtree (pre-order), no pruning.
void ForEachNode(const AstNode& node,
                 const std::function<void(const AstNode&)>& visit);

// JSON rendering for --dump-ast. See docs/ast-json.md for the schema.
std::string AstToJson(const AstNode& root, int indent = 2);

}  // namespace oraclescan

#endif  // ORACLESCAN_AST_HPP_
