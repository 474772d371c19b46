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

#include "oraclescan/strategy.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "oraclescan/keywords.hpp"

namespace oraclescan {

std::string_view ToString(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::kCentralizedOracle: return "CentralizedOracle";
    case StrategyLabel::kDecentralizedOracle: return "DecentralizedOracle";
    case StrategyLabel::kSidechain: return "Sidechain";
    case StrategyLabel::kCrossChainBridge: return "CrossChainBridge";
    case StrategyLabel::kZkp: return "ZKP";
  }
  return "?";
}

std::optional<StrategyLabel> StrategyLabelFromString(std::string_view text) {
  for (StrategyLabel label : kAllStrategies) {
    if (ToString(label) == text) return label;
  }
  return std::nullopt;
}

namespace {

using NameSet = std::unordered_set<std::string>;

bool NameContains(std::string_view name, std::string_view needle) {
  return ToLower(name).find(needle) != std::string::npos;
}

bool AnyNode(const AstNode& root,
             const std::function<bool(const AstNode&)>& pred) {
  bool found = false;
  Walk(root, [&](const AstNode& node) {
    if (found) return false;
    if (pred(node)) found = true;
    return !found;
  });
  return found;
}

bool IsMsgSender(const AstNode& node) {
  return node.kind == NodeKind::kMemberAccess && node.NameOr() == "sender" &&
         node.children.size() == 1 &&
         node.children[0].kind == NodeKind::kIdentifier &&
         node.children[0].NameOr() == "msg";
}

bool IsIdentifierIn(const AstNode& node, const NameSet& names) {
  return node.kind == NodeKind::kIdentifier && node.name &&
         names.contains(*node.name);
}

// A RequireCall somewhere in `root` comparing msg.sender with one of `vars`.
bool RequiresSenderIs(const AstNode& root, const NameSet& vars) {
  return AnyNode(root, [&](const AstNode& node) {
    if (node.kind != NodeKind::kRequireCall) return false;
    return AnyNode(node, [&](const AstNode& expr) {
      if (!expr.IsOther("binary") || (expr.text != "==" && expr.text != "!=") ||
          expr.children.size() != 2) {
        return false;
      }
      const AstNode& a = expr.children[0];
      const AstNode& b = expr.children[1];
      return (IsMsgSender(a) && IsIdentifierIn(b, vars)) ||
             (IsMsgSender(b) && IsIdentifierIn(a, vars));
    });
  });
}

bool IsStateMutating(const AstNode& function) {
  const std::string& spec = function.text;
  for (std::string_view word : {"view", "pure", "constant"}) {
    std::size_t pos = 0;
    while ((pos = spec.find(word, pos)) != std::string::npos) {
      const bool start_ok = pos == 0 || spec[pos - 1] == ' ';
      const std::size_t end = pos + word.size();
      const bool end_ok = end == spec.size() || spec[end] == ' ';
      if (start_ok && end_ok) return false;
      pos = end;
    }
  }
  return true;
}

std::vector<std::string> InvokedModifiers(const AstNode& function) {
  std::vector<std::string> out;
  for (const AstNode& child : function.children) {
    if (child.kind == NodeKind::kIdentifier && child.name) {
      out.push_back(*child.name);
    } else if (child.kind == NodeKind::kFunctionCall &&
               !child.children.empty() &&
               child.children[0].kind == NodeKind::kIdentifier) {
      out.emplace_back(child.children[0].NameOr());
    }
  }
  return out;
}

std::vector<const AstNode*> MembersOf(const AstNode& contract, NodeKind kind) {
  std::vector<const AstNode*> out;
  for (const AstNode& child : contract.children) {
    if (child.kind == kind) out.push_back(&child);
  }
  return out;
}

bool IsIndexAtSender(const AstNode& node, const NameSet& mappings) {
  return node.IsOther("index") && node.children.size() == 2 &&
         IsIdentifierIn(node.children[0], mappings) &&
         IsMsgSender(node.children[1]);
}

bool IncrementsAtSender(const AstNode& body, const NameSet& mappings) {
  return AnyNode(body, [&](const AstNode& node) {
    if (node.kind == NodeKind::kAssignment && node.children.size() == 2 &&
        IsIndexAtSender(node.children[0], mappings)) {
      if (node.text == "+=") return true;
      if (node.text == "=") {
        const AstNode& rhs = node.children[1];
        return rhs.IsOther("binary") && rhs.text == "+" &&
               AnyNode(rhs, [&](const AstNode& n) {
                 return IsIndexAtSender(n, mappings);
               });
      }
      return false;
    }
    if ((node.IsOther("unary") || node.IsOther("postfix")) &&
        node.text == "++" && node.children.size() == 1) {
      return IsIndexAtSender(node.children[0], mappings);
    }
    return false;
  });
}

bool EmitsOneOf(const AstNode& body, const NameSet& events) {
  return AnyNode(body, [&](const AstNode& node) {
    if (node.kind != NodeKind::kEmitStmt || node.children.empty()) {
      return false;
    }
    const AstNode& call = node.children[0];
    return call.kind == NodeKind::kFunctionCall && !call.children.empty() &&
           IsIdentifierIn(call.children[0], events);
  });
}

class Classifier {
 public:
  explicit Classifier(const AstNode& contract) : contract_(contract) {
    for (const AstNode* var : MembersOf(contract, NodeKind::kStateVarDecl)) {
      if (!var->name || var->children.empty()) continue;
      const AstNode& type = var->children[0];
      if (type.kind == NodeKind::kElementaryType &&
          type.NameOr().starts_with("address")) {
        address_vars_.insert(*var->name);
      }
      if (type.kind == NodeKind::kMappingType &&
          NameContains(*var->name, "locked")) {
        locked_mappings_.insert(*var->name);
      }
      if (NameContains(*var->name, "oracle")) oracle_vars_.insert(*var->name);
    }
    for (const AstNode* event : MembersOf(contract, NodeKind::kEventDef)) {
      for (const AstNode& param : event->children) {
        if (param.kind == NodeKind::kParamDecl && param.name &&
            NameContains(*param.name, "chain")) {
          chain_events_.insert(*event->name);
          break;
        }
      }
    }
    functions_ = MembersOf(contract, NodeKind::kFunctionDef);
    modifiers_ = MembersOf(contract, NodeKind::kModifierDef);
  }

  StrategySet Run() const {
    StrategySet out;
    if (CentralizedOracle()) out.insert(StrategyLabel::kCentralizedOracle);
    if (DecentralizedOracle()) out.insert(StrategyLabel::kDecentralizedOracle);
    if (Sidechain()) out.insert(StrategyLabel::kSidechain);
    if (CrossChainBridge()) out.insert(StrategyLabel::kCrossChainBridge);
    if (Zkp()) out.insert(StrategyLabel::kZkp);
    return out;
  }

 private:
  // Modifiers whose body requires msg.sender to equal one of `vars`.
  NameSet GuardModifiers(const NameSet& vars) const {
    NameSet out;
    for (const AstNode* modifier : modifiers_) {
      const AstNode* body = modifier->Body();
      if (body && RequiresSenderIs(*body, vars)) out.insert(*modifier->name);
    }
    return out;
  }

  bool CentralizedOracle() const {
    const NameSet guards = GuardModifiers(address_vars_);
    for (const AstNode* fn : functions_) {
      if (!IsStateMutating(*fn)) continue;
      for (const std::string& m : InvokedModifiers(*fn)) {
        if (guards.contains(m)) return true;
      }
    }
    if (oracle_vars_.empty()) return false;
    const NameSet oracle_guards = GuardModifiers(oracle_vars_);
    for (const AstNode* fn : functions_) {
      const AstNode* body = fn->Body();
      if (!body || !IsStateMutating(*fn)) continue;
      bool gated = RequiresSenderIs(*body, oracle_vars_);
      for (const std::string& m : InvokedModifiers(*fn)) {
        gated = gated || oracle_guards.contains(m);
      }
      const bool assigns = AnyNode(*body, [](const AstNode& n) {
        return n.kind == NodeKind::kAssignment;
      });
      if (gated && assigns) return true;
    }
    return false;
  }

  bool DecentralizedOracle() const {
    return AnyNode(contract_, [](const AstNode& node) {
      if (node.kind == NodeKind::kFunctionCall && !node.children.empty() &&
          node.children[0].kind == NodeKind::kMemberAccess &&
          node.children[0].NameOr() == "latestRoundData") {
        return true;
      }
      return node.kind == NodeKind::kIdentifier && node.name &&
             NameContains(*node.name, "aggregator");
    });
  }

  bool Sidechain() const {
    if (locked_mappings_.empty()) return false;
    for (const AstNode* fn : functions_) {
      const AstNode* body = fn->Body();
      if (!body || !NameContains(fn->NameOr(), "lock")) continue;
      if (IncrementsAtSender(*body, locked_mappings_) &&
          !EmitsOneOf(*body, chain_events_)) {
        return true;
      }
    }
    return false;
  }

  bool CrossChainBridge() const {
    for (const AstNode* fn : functions_) {
      const AstNode* body = fn->Body();
      if (body && NameContains(fn->NameOr(), "lock") &&
          EmitsOneOf(*body, chain_events_)) {
        return true;
      }
    }
    auto bridge_like = [](std::string_view name) {
      return NameContains(name, "bridge") || NameContains(name, "crosschain");
    };
    if (bridge_like(contract_.NameOr())) return true;
    for (const AstNode& member : contract_.children) {
      const bool declares =
          NameKindOf(member.kind).has_value() ||
          member.kind == NodeKind::kStateVarDecl;
      if (declares && member.name && bridge_like(*member.name)) return true;
    }
    return false;
  }

  bool Zkp() const {
    for (const AstNode* fn : functions_) {
      const std::string lowered = ToLower(fn->NameOr());
      if (lowered.find("verifyproof") != std::string::npos) return true;
      if (lowered != "verify") continue;
      for (const AstNode& param : fn->children) {
        if (param.kind == NodeKind::kParamDecl && param.name &&
            !param.text.starts_with("return") && !param.children.empty() &&
            param.children[0].kind == NodeKind::kElementaryType &&
            param.children[0].NameOr() == "bytes" &&
            NameContains(*param.name, "proof")) {
          return true;
        }
      }
    }
    return false;
  }

  const AstNode& contract_;
  NameSet address_vars_;
  NameSet locked_mappings_;
  NameSet oracle_vars_;
  NameSet chain_events_;
  std::vector<const AstNode*> functions_;
  std::vector<const AstNode*> modifiers_;
};

}  // namespace

StrategySet ClassifyStrategies(const AstNode& contract) {
  if (!IsContractLike(contract.kind)) return {};
  return Classifier(contract).Run();
}

}  // namespace oraclescan
