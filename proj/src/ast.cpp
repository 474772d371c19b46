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

#include "oraclescan/ast.hpp"

#include <json.hpp>

namespace oraclescan {

std::string_view ToString(NodeKind kind) {
  switch (kind) {
    case NodeKind::kSourceUnit: return "SourceUnit";
    case NodeKind::kContractDef: return "ContractDef";
    case NodeKind::kInterfaceDef: return "InterfaceDef";
    case NodeKind::kLibraryDef: return "LibraryDef";
    case NodeKind::kFunctionDef: return "FunctionDef";
    case NodeKind::kConstructorDef: return "ConstructorDef";
    case NodeKind::kModifierDef: return "ModifierDef";
    case NodeKind::kEventDef: return "EventDef";
    case NodeKind::kStateVarDecl: return "StateVarDecl";
    case NodeKind::kParamDecl: return "ParamDecl";
    case NodeKind::kBlock: return "Block";
    case NodeKind::kIfStmt: return "IfStmt";
    case NodeKind::kForStmt: return "ForStmt";
    case NodeKind::kWhileStmt: return "WhileStmt";
    case NodeKind::kDoWhileStmt: return "DoWhileStmt";
    case NodeKind::kReturnStmt: return "ReturnStmt";
    case NodeKind::kEmitStmt: return "EmitStmt";
    case NodeKind::kExprStmt: return "ExprStmt";
    case NodeKind::kVarDeclStmt: return "VarDeclStmt";
    case NodeKind::kRequireCall: return "RequireCall";
    case NodeKind::kFunctionCall: return "FunctionCall";
    case NodeKind::kMemberAccess: return "MemberAccess";
    case NodeKind::kIdentifier: return "Identifier";
    case NodeKind::kTernary: return "Ternary";
    case NodeKind::kAssignment: return "Assignment";
    case NodeKind::kLiteral: return "Literal";
    case NodeKind::kMappingType: return "MappingType";
    case NodeKind::kElementaryType: return "ElementaryType";
    case NodeKind::kOther: return "Other";
  }
  return "?";
}

const AstNode* AstNode::Body() const {
  if (!IsCallableDef(kind) || children.empty()) return nullptr;
  const AstNode& last = children.back();
  return last.kind == NodeKind::kBlock ? &last : nullptr;
}

bool IsContractLike(NodeKind kind) {
  return kind == NodeKind::kContractDef || kind == NodeKind::kInterfaceDef ||
         kind == NodeKind::kLibraryDef;
}

bool IsCallableDef(NodeKind kind) {
  return kind == NodeKind::kFunctionDef || kind == NodeKind::kConstructorDef ||
         kind == NodeKind::kModifierDef;
}

bool IsStatement(NodeKind kind) {
  switch (kind) {
    case NodeKind::kBlock:
    case NodeKind::kIfStmt:
    case NodeKind::kForStmt:
    case NodeKind::kWhileStmt:
    case NodeKind::kDoWhileStmt:
    case NodeKind::kReturnStmt:
    case NodeKind::kEmitStmt:
    case NodeKind::kExprStmt:
    case NodeKind::kVarDeclStmt:
    case NodeKind::kRequireCall:
      return true;
    default:
      return false;
  }
}

void Walk(const AstNode& node,
          const std::function<bool(const AstNode&)>& visit) {
  if (!visit(node)) return;
  for (const AstNode& child : node.children) Walk(child, visit);
}

void ForEachNode(const AstNode& node,
                 const std::function<void(const AstNode&)>& visit) {
  visit(node);
  for (const AstNode& child : node.children) ForEachNode(child, visit);
}

namespace {

nlohmann::ordered_json ToJson(const AstNode& node) {
  nlohmann::ordered_json out;
  out["kind"] = ToString(node.kind);
  out["name"] = node.name ? nlohmann::ordered_json(*node.name)
                          : nlohmann::ordered_json(nullptr);
  if (!node.text.empty()) out["text"] = node.text;
  out["span"] = {{"start", {node.span.start.line, node.span.start.column}},
                 {"end", {node.span.end.line, node.span.end.column}}};
  auto children = nlohmann::ordered_json::array();
  for (const AstNode& child : node.children) children.push_back(ToJson(child));
  out["children"] = std::move(children);
  return out;
}

}  // namespace

std::string AstToJson(const AstNode& root, int indent) {
  return ToJson(root).dump(indent) + "\n";
}

}  // namespace oraclescan
