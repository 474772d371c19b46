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

#include "oraclescan/cfg.hpp"

#include <algorithm>
#include <sstream>

namespace oraclescan {

std::string_view ToString(CfgNodeKind kind) {
  switch (kind) {
    case CfgNodeKind::kEntry: return "Entry";
    case CfgNodeKind::kExit: return "Exit";
    case CfgNodeKind::kStatement: return "Statement";
    case CfgNodeKind::kBranch: return "Branch";
    case CfgNodeKind::kMerge: return "Merge";
  }
  return "?";
}

std::size_t ControlFlowGraph::NodeCount(int component) const {
  return static_cast<std::size_t>(
      std::count(component_of.begin(), component_of.end(), component));
}

std::size_t ControlFlowGraph::EdgeCount(int component) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
        return component_of[e.first] == component;
      }));
}

namespace {

class CfgBuilder {
 public:
  explicit CfgBuilder(const CfgOptions& options) : options_(options) {}

  ControlFlowGraph Finish() && {
    std::sort(graph_.edges.begin(), graph_.edges.end());
    graph_.edges.erase(std::unique(graph_.edges.begin(), graph_.edges.end()),
                       graph_.edges.end());
    return std::move(graph_);
  }

  void AddCallable(const AstNode& callable, std::string owner) {
    const AstNode* body = callable.Body();
    if (!body) return;
    CfgComponent component;
    component.owner = std::move(owner);
    component.callable = callable.kind == NodeKind::kConstructorDef
                             ? "constructor"
                             : std::string(callable.NameOr());
    component.callable_kind = callable.kind;
    component.callable_span = callable.span;
    component_ = static_cast<int>(graph_.components.size());
    component.entry = NewNode(CfgNodeKind::kEntry, callable.span);
    cursor_ = component.entry;
    fail_nodes_.clear();
    Statement(*body);
    component.exit = NewNode(CfgNodeKind::kExit, callable.span);
    Edge(cursor_, component.exit);
    for (int fail : fail_nodes_) Edge(fail, component.exit);
    graph_.components.push_back(std::move(component));
  }

 private:
  int NewNode(CfgNodeKind kind, std::optional<Span> ref) {
    const int id = static_cast<int>(graph_.nodes.size());
    graph_.nodes.push_back({id, kind, std::move(ref)});
    graph_.component_of.push_back(component_);
    return id;
  }

  void Edge(int from, int to) { graph_.edges.emplace_back(from, to); }

  // New node fed by the cursor; becomes the cursor.
  int Append(CfgNodeKind kind, const Span& span) {
    const int id = NewNode(kind, span);
    Edge(cursor_, id);
    cursor_ = id;
    return id;
  }

  // Runs `build` from `from`; when it adds no node a placeholder Statement is
  // appended so that the arm is a distinct path. Returns the arm's last node.
  template <typename F>
  int Arm(int from, const Span& span, F&& build) {
    cursor_ = from;
    const std::size_t before = graph_.nodes.size();
    build();
    if (graph_.nodes.size() == before) Append(CfgNodeKind::kStatement, span);
    return cursor_;
  }

  // Ternaries in evaluation order, each as Branch -> {arm, arm} -> Merge.
  void Expression(const AstNode& expr) {
    if (expr.kind != NodeKind::kTernary) {
      for (const AstNode& child : expr.children) Expression(child);
      return;
    }
    Expression(expr.children[0]);
    const int branch = Append(CfgNodeKind::kBranch, expr.span);
    const int then_end =
        Arm(branch, expr.children[1].span, [&] { Expression(expr.children[1]); });
    const int else_end =
        Arm(branch, expr.children[2].span, [&] { Expression(expr.children[2]); });
    const int merge = NewNode(CfgNodeKind::kMerge, expr.span);
    Edge(then_end, merge);
    Edge(else_end, merge);
    cursor_ = merge;
  }

  void Statement(const AstNode& stmt) {
    switch (stmt.kind) {
      case NodeKind::kBlock:
        for (const AstNode& child : stmt.children) Statement(child);
        return;
      case NodeKind::kIfStmt: {
        Expression(stmt.children[0]);
        const int branch = Append(CfgNodeKind::kBranch, stmt.children[0].span);
        const int then_end = Arm(branch, stmt.children[1].span,
                                 [&] { Statement(stmt.children[1]); });
        int else_end = branch;
        if (stmt.children.size() > 2) {
          else_end = Arm(branch, stmt.children[2].span,
                         [&] { Statement(stmt.children[2]); });
        }
        const int merge = NewNode(CfgNodeKind::kMerge, stmt.span);
        Edge(then_end, merge);
        Edge(else_end, merge);
        cursor_ = merge;
        return;
      }
      case NodeKind::kWhileStmt: {
        const int condition_start = NextId();
        Expression(stmt.children[0]);
        const int branch = Append(CfgNodeKind::kBranch, stmt.children[0].span);
        const int body_end = Arm(branch, stmt.children[1].span,
                                 [&] { Statement(stmt.children[1]); });
        Edge(body_end, condition_start);
        cursor_ = branch;
        return;
      }
      case NodeKind::kForStmt: {
        const AstNode& init = stmt.children[0];
        const AstNode& condition = stmt.children[1];
        const AstNode& post = stmt.children[2];
        if (!init.IsOther("empty")) Statement(init);
        const int condition_start = NextId();
        Expression(condition);
        const int branch = Append(CfgNodeKind::kBranch, condition.span);
        const int body_end = Arm(branch, stmt.children[3].span, [&] {
          Statement(stmt.children[3]);
          if (!post.IsOther("empty")) {
            Expression(post);
            Append(CfgNodeKind::kStatement, post.span);
          }
        });
        Edge(body_end, condition_start);
        cursor_ = branch;
        return;
      }
      case NodeKind::kDoWhileStmt: {
        const int body_start = NextId();
        Arm(cursor_, stmt.children[0].span,
            [&] { Statement(stmt.children[0]); });
        Expression(stmt.children[1]);
        const int branch = Append(CfgNodeKind::kBranch, stmt.children[1].span);
        Edge(branch, body_start);
        return;
      }
      case NodeKind::kRequireCall:
        for (const AstNode& child : stmt.children) Expression(child);
        if (options_.require_branches) {
          const int branch = Append(CfgNodeKind::kBranch, stmt.span);
          fail_nodes_.push_back(NewNode(CfgNodeKind::kStatement, stmt.span));
          Edge(branch, fail_nodes_.back());
          cursor_ = branch;
        } else {
          Append(CfgNodeKind::kStatement, stmt.span);
        }
        return;
      default:
        break;
    }
    // Other statements wrapping blocks (unchecked, try) run them in order;
    // everything else is a single straight-line node.
    const bool has_blocks =
        std::any_of(stmt.children.begin(), stmt.children.end(),
                    [](const AstNode& c) { return c.kind == NodeKind::kBlock; });
    if (stmt.kind == NodeKind::kOther && has_blocks) {
      for (const AstNode& child : stmt.children) {
        if (child.kind == NodeKind::kBlock) {
          Statement(child);
        } else {
          Expression(child);
        }
      }
      Append(CfgNodeKind::kStatement, stmt.span);
      return;
    }
    for (const AstNode& child : stmt.children) Expression(child);
    Append(CfgNodeKind::kStatement, stmt.span);
  }

  int NextId() const { return static_cast<int>(graph_.nodes.size()); }

  const CfgOptions& options_;
  ControlFlowGraph graph_;
  int component_ = 0;
  int cursor_ = 0;
  std::vector<int> fail_nodes_;
};

void CollectCallables(const AstNode& node, const std::string& owner,
                      CfgBuilder& builder) {
  for (const AstNode& child : node.children) {
    if (IsCallableDef(child.kind)) {
      builder.AddCallable(child, owner);
    } else if (IsContractLike(child.kind)) {
      CollectCallables(child, std::string(child.NameOr()), builder);
    }
  }
}

}  // namespace

ControlFlowGraph BuildCfg(const AstNode& unit, const CfgOptions& options) {
  CfgBuilder builder(options);
  CollectCallables(unit, "", builder);
  return std::move(builder).Finish();
}

long Cyclomatic(const ControlFlowGraph& cfg) {
  if (cfg.nodes.empty()) return 0;
  return static_cast<long>(cfg.edges.size()) -
         static_cast<long>(cfg.nodes.size()) +
         2 * static_cast<long>(cfg.components.size());
}

long ComponentCyclomatic(const ControlFlowGraph& cfg, int component) {
  return static_cast<long>(cfg.EdgeCount(component)) -
         static_cast<long>(cfg.NodeCount(component)) + 2;
}

long DecisionPointCount(const AstNode& unit, const CfgOptions& options) {
  long count = 0;
  Walk(unit, [&](const AstNode& node) {
    if (!IsCallableDef(node.kind)) return true;
    const AstNode* body = node.Body();
    if (!body) return false;
    ++count;
    ForEachNode(*body, [&](const AstNode& n) {
      switch (n.kind) {
        case NodeKind::kIfStmt:
        case NodeKind::kForStmt:
        case NodeKind::kWhileStmt:
        case NodeKind::kDoWhileStmt:
        case NodeKind::kTernary:
          ++count;
          break;
        case NodeKind::kRequireCall:
          if (options.require_branches) ++count;
          break;
        default:
          break;
      }
    });
    return false;
  });
  return count;
}

std::string ComponentToDot(const ControlFlowGraph& cfg, int component) {
  const CfgComponent& c = cfg.components.at(component);
  std::ostringstream out;
  out << "digraph \"" << (c.owner.empty() ? "" : c.owner + ".") << c.callable
      << "\" {\n";
  for (const CfgNode& node : cfg.nodes) {
    if (cfg.component_of[node.id] != component) continue;
    out << "  n" << node.id << " [label=\"" << ToString(node.kind) << "\"];\n";
  }
  for (const auto& [from, to] : cfg.edges) {
    if (cfg.component_of[from] != component) continue;
    out << "  n" << from << " -> n" << to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace oraclescan
