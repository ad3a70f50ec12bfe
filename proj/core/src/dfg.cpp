#include "trojanscope/dfg.hpp"

#include <algorithm>
#include <set>

#include "trojanscope/pretty.hpp"

namespace trojanscope {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::signal: return "signal";
    case NodeKind::operation: return "operation";
    case NodeKind::constant: return "constant";
  }
  return "?";
}

std::vector<std::vector<int>> DataFlowGraph::children_lists() const {
  std::vector<std::vector<int>> out(nodes.size());
  for (const auto& [i, j] : edges) out[static_cast<size_t>(i)].push_back(j);
  return out;
}

std::vector<std::vector<int>> DataFlowGraph::parent_lists() const {
  std::vector<std::vector<int>> out(nodes.size());
  for (const auto& [i, j] : edges) out[static_cast<size_t>(j)].push_back(i);
  return out;
}

namespace {

const char* unary_mnemonic(UnaryOp op) {
  switch (op) {
    case UnaryOp::bit_not: return "not";
    case UnaryOp::logical_not: return "logical-not";
    // The tag set folds reduce-and into the binary and tag.
    case UnaryOp::reduce_and: return "and";
    case UnaryOp::reduce_or: return "reduce-or";
    case UnaryOp::reduce_xor: return "reduce-xor";
    case UnaryOp::reduce_nand: return "nand";
    case UnaryOp::reduce_nor: return "nor";
    case UnaryOp::reduce_xnor: return "xnor";
    case UnaryOp::plus: return "plus";
    case UnaryOp::minus: return "minus";
  }
  return "?";
}

const char* binary_mnemonic(BinaryOp op) {
  switch (op) {
    case BinaryOp::bit_and: return "and";
    case BinaryOp::bit_or: return "or";
    case BinaryOp::bit_xor: return "xor";
    case BinaryOp::bit_xnor: return "xnor";
    case BinaryOp::logical_and: return "logical-and";
    case BinaryOp::logical_or: return "logical-or";
    case BinaryOp::eq: return "eq";
    case BinaryOp::neq: return "neq";
    case BinaryOp::lt: return "lt";
    case BinaryOp::le: return "le";
    case BinaryOp::gt: return "gt";
    case BinaryOp::ge: return "ge";
    case BinaryOp::add: return "plus";
    case BinaryOp::sub: return "minus";
    case BinaryOp::mul: return "times";
    case BinaryOp::div: return "divide";
    case BinaryOp::mod: return "mod";
    case BinaryOp::shl: return "shift-left";
    case BinaryOp::shr: return "shift-right";
  }
  return "?";
}

class TreeBuilder {
 public:
  TreeBuilder(const FlatDesign& design, NamingContext& ctx) : design_(design), ctx_(ctx) {}

  DepTree take() {
    DepTree t;
    t.graph = std::move(graph_);
    t.root = root_;
    return t;
  }

  int signal_node(const std::string& name, const SourceSpan* span) {
    auto it = graph_.signal_index.find(name);
    if (it != graph_.signal_index.end()) return it->second;
    int id = add_node(name, NodeKind::signal, span);
    graph_.signal_index[name] = id;
    return id;
  }

  int op_node(const std::string& mnemonic, const SourceSpan& span) {
    return add_node(ctx_.unique_name(mnemonic), NodeKind::operation, &span);
  }

  int const_node(const Expr::Const& c, const SourceSpan& span) {
    return add_node(ctx_.unique_name(render_const(c)), NodeKind::constant, &span);
  }

  void edge(int parent, int child) { graph_.edges.emplace_back(parent, child); }

  /// Build the node for an elaborated rvalue expression.
  int expr_tree(const Expr& e) {
    if (e.is<Expr::Ident>()) {
      return signal_node(e.as<Expr::Ident>().name, &e.span);
    }
    if (e.is<Expr::Const>()) {
      return const_node(e.as<Expr::Const>(), e.span);
    }
    if (e.is<Expr::Unary>()) {
      int n = op_node(unary_mnemonic(e.as<Expr::Unary>().op), e.span);
      edge(n, expr_tree(e.children[0]));
      return n;
    }
    if (e.is<Expr::Binary>()) {
      int n = op_node(binary_mnemonic(e.as<Expr::Binary>().op), e.span);
      edge(n, expr_tree(e.children[0]));
      edge(n, expr_tree(e.children[1]));
      return n;
    }
    if (e.is<Expr::Ternary>()) {
      int n = op_node("branch", e.span);
      for (const auto& c : e.children) edge(n, expr_tree(c));
      return n;
    }
    if (e.is<Expr::Concat>()) {
      int n = op_node("concat", e.span);
      for (const auto& c : e.children) edge(n, expr_tree(c));
      return n;
    }
    if (e.is<Expr::Repeat>()) {
      int n = op_node("concat", e.span);
      edge(n, expr_tree(e.children[0]));
      edge(n, expr_tree(e.children[1]));
      return n;
    }
    if (e.is<Expr::BitSelect>()) {
      int n = op_node("part-select", e.span);
      edge(n, expr_tree(e.children[0]));
      edge(n, expr_tree(e.children[1]));
      return n;
    }
    // PartSelect
    int n = op_node("part-select", e.span);
    for (const auto& c : e.children) edge(n, expr_tree(c));
    return n;
  }

  // ---- per-root extraction ----

  /// Either the value tree built so far, or "prior value of the target",
  /// which renders as a self-reference on the target's signal node.
  using Value = std::optional<int>;

  int materialize(const Value& v) {
    if (v) return *v;
    return signal_node(target_, nullptr);
  }

  static bool lhs_targets(const Expr& lhs, const std::string& target) {
    if (lhs.is<Expr::Ident>()) return lhs.as<Expr::Ident>().name == target;
    if (lhs.is<Expr::BitSelect>() || lhs.is<Expr::PartSelect>()) {
      return lhs.children[0].as<Expr::Ident>().name == target;
    }
    if (lhs.is<Expr::Concat>()) {
      return std::any_of(lhs.children.begin(), lhs.children.end(),
                         [&](const Expr& c) { return lhs_targets(c, target); });
    }
    return false;
  }

  /// New value of the target after `lhs = rhs`. Partial updates (selects,
  /// concat elements) depend on the prior value as well.
  Value assign_value(const Expr& lhs, const Expr& rhs, const Value& prior) {
    if (lhs.is<Expr::Ident>()) {
      return expr_tree(rhs);
    }
    if (lhs.is<Expr::BitSelect>()) {
      int n = op_node("part-select", lhs.span);
      edge(n, materialize(prior));
      edge(n, expr_tree(lhs.children[1]));
      edge(n, expr_tree(rhs));
      return n;
    }
    if (lhs.is<Expr::PartSelect>()) {
      int n = op_node("part-select", lhs.span);
      edge(n, materialize(prior));
      edge(n, expr_tree(lhs.children[1]));
      edge(n, expr_tree(lhs.children[2]));
      edge(n, expr_tree(rhs));
      return n;
    }
    // Concat lvalue: the target's new value is its slice of the rhs.
    int n = op_node("part-select", lhs.span);
    if (!lhs_is_whole_target(lhs)) edge(n, materialize(prior));
    edge(n, expr_tree(rhs));
    return n;
  }

  bool lhs_is_whole_target(const Expr& lhs) const {
    // Inside a concat lvalue the piece that names the target directly
    // replaces it entirely; a select piece only replaces bits.
    for (const auto& c : lhs.children) {
      if (c.is<Expr::Ident>() && c.as<Expr::Ident>().name == target_) return true;
    }
    return false;
  }

  Value build_value(const std::vector<Stmt>& body, const Value& start) {
    Value current = start;
    for (const auto& s : body) {
      if (s.is<Stmt::Assign>()) {
        const auto& a = s.as<Stmt::Assign>();
        if (lhs_targets(a.lhs, target_)) {
          current = assign_value(a.lhs, a.rhs, current);
        }
      } else if (s.is<Stmt::If>()) {
        const auto& i = s.as<Stmt::If>();
        Value t = build_value(i.then_body, current);
        Value e = build_value(i.else_body, current);
        if (t != current || e != current) {
          int n = op_node("branch", s.span);
          edge(n, expr_tree(i.cond));
          edge(n, t == current ? materialize(current) : materialize(t));
          edge(n, e == current ? materialize(current) : materialize(e));
          current = n;
        }
      } else {
        const auto& c = s.as<Stmt::Case>();
        std::vector<Value> arm_values;
        Value default_value = current;
        bool any = false;
        for (const auto& item : c.items) {
          Value v = build_value(item.body, current);
          if (v != current) any = true;
          if (item.is_default) default_value = v;
          arm_values.push_back(v);
        }
        if (!any) continue;
        // Lower to a chain of branch nodes guarded by equality tests, last
        // label first so the first label ends up outermost.
        int acc = materialize(default_value);
        for (size_t idx = c.items.size(); idx-- > 0;) {
          const auto& item = c.items[idx];
          if (item.is_default) continue;
          for (size_t li = item.labels.size(); li-- > 0;) {
            int eq = op_node("eq", item.labels[li].span);
            edge(eq, expr_tree(c.selector));
            edge(eq, expr_tree(item.labels[li]));
            int br = op_node("branch", s.span);
            edge(br, eq);
            edge(br, materialize(arm_values[idx]));
            edge(br, acc);
            acc = br;
          }
        }
        current = acc;
      }
    }
    return current;
  }

  /// Returns false if nothing drives the root.
  bool extract(const std::string& root) {
    target_ = root;
    const FlatSignal* sig = design_.find(root);
    root_ = signal_node(root, sig ? &sig->span : nullptr);

    bool driven = false;
    for (const auto& item : design_.items) {
      if (item.is<ContinuousAssign>()) {
        const auto& ca = item.as<ContinuousAssign>();
        if (!lhs_targets(ca.lhs, root)) continue;
        Value v = assign_value(ca.lhs, ca.rhs, std::nullopt);
        edge(root_, materialize(v));
        driven = true;
      } else if (item.is<AlwaysBlock>()) {
        const auto& blk = item.as<AlwaysBlock>();
        // Clock/reset edges are not data dependencies; only the body counts.
        Value v = build_value(blk.body, std::nullopt);
        if (v.has_value()) {
          edge(root_, *v);
          driven = true;
        }
      }
    }
    return driven;
  }

 private:
  int add_node(std::string name, NodeKind kind, const SourceSpan* span) {
    DfgNode n;
    n.id = static_cast<int>(graph_.nodes.size());
    n.name = std::move(name);
    n.kind = kind;
    if (span && !span->file.empty()) n.span = *span;
    graph_.nodes.push_back(std::move(n));
    return graph_.nodes.back().id;
  }

  const FlatDesign& design_;
  NamingContext& ctx_;
  DataFlowGraph graph_;
  int root_ = -1;
  std::string target_;
};

DepTree extract_one(const FlatDesign& design, const std::string& root, NamingContext& ctx,
                    bool throw_if_undriven) {
  const FlatSignal* sig = design.find(root);
  if (!sig) {
    throw Error(Errc::unassigned_signal, "no signal named '" + root + "'");
  }
  TreeBuilder builder(design, ctx);
  bool driven = builder.extract(root);
  if (!driven && throw_if_undriven && sig->kind != SignalKind::input) {
    throw Error(Errc::unassigned_signal, sig->span,
                "signal '" + root + "' is never assigned");
  }
  return builder.take();
}

}  // namespace

DepTree extract_signal_subgraph(const FlatDesign& design, const std::string& root,
                                NamingContext& ctx) {
  return extract_one(design, root, ctx, /*throw_if_undriven=*/true);
}

std::vector<DepTree> extract_all(const FlatDesign& design) {
  NamingContext ctx;
  std::vector<DepTree> trees;
  trees.reserve(design.signals.size());
  for (const auto& s : design.signals) {
    trees.push_back(extract_one(design, s.name, ctx, /*throw_if_undriven=*/false));
  }
  return trees;
}

DataFlowGraph merge_subgraphs(const std::vector<DepTree>& trees) {
  DataFlowGraph out;
  std::set<std::pair<int, int>> edge_set;
  std::set<std::string> taken_names;
  NamingContext remap_ctx;

  for (const auto& tree : trees) {
    std::vector<int> id_map(tree.graph.nodes.size(), -1);
    for (const auto& node : tree.graph.nodes) {
      if (node.kind == NodeKind::signal) {
        auto it = out.signal_index.find(node.name);
        if (it != out.signal_index.end()) {
          id_map[static_cast<size_t>(node.id)] = it->second;
          continue;
        }
      }
      DfgNode copy = node;
      copy.id = static_cast<int>(out.nodes.size());
      if (copy.kind != NodeKind::signal && !taken_names.insert(copy.name).second) {
        // Trees built under a foreign naming context may collide; operation
        // and constant nodes must never unify, so re-suffix.
        std::string fresh;
        do {
          fresh = remap_ctx.unique_name(copy.name);
        } while (!taken_names.insert(fresh).second);
        copy.name = fresh;
      }
      if (copy.kind == NodeKind::signal) {
        if (!taken_names.insert(copy.name).second) {
          throw Error(Errc::internal_error,
                      "signal name collides with an operation node: '" + copy.name + "'");
        }
        out.signal_index[copy.name] = copy.id;
      }
      id_map[static_cast<size_t>(node.id)] = copy.id;
      out.nodes.push_back(std::move(copy));
    }
    for (const auto& [i, j] : tree.graph.edges) {
      edge_set.emplace(id_map[static_cast<size_t>(i)], id_map[static_cast<size_t>(j)]);
    }
  }
  out.edges.assign(edge_set.begin(), edge_set.end());
  return out;
}

DataFlowGraph prune_standalone(const DataFlowGraph& graph) {
  std::vector<int> degree(graph.nodes.size(), 0);
  for (const auto& [i, j] : graph.edges) {
    ++degree[static_cast<size_t>(i)];
    ++degree[static_cast<size_t>(j)];
  }
  DataFlowGraph out;
  out.tagset_version = graph.tagset_version;
  std::vector<int> id_map(graph.nodes.size(), -1);
  for (const auto& node : graph.nodes) {
    if (degree[static_cast<size_t>(node.id)] == 0) continue;
    DfgNode copy = node;
    copy.id = static_cast<int>(out.nodes.size());
    id_map[static_cast<size_t>(node.id)] = copy.id;
    if (copy.kind == NodeKind::signal) out.signal_index[copy.name] = copy.id;
    out.nodes.push_back(std::move(copy));
  }
  if (out.nodes.empty()) {
    throw Error(Errc::empty_graph, "pruning removed every node");
  }
  out.edges.reserve(graph.edges.size());
  for (const auto& [i, j] : graph.edges) {
    out.edges.emplace_back(id_map[static_cast<size_t>(i)], id_map[static_cast<size_t>(j)]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

DataFlowGraph build_graph(const FlatDesign& design) {
  return prune_standalone(merge_subgraphs(extract_all(design)));
}

}  // namespace trojanscope
