#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trojanscope/elaborate.hpp"

namespace trojanscope {

enum class NodeKind { signal, operation, constant };

const char* node_kind_name(NodeKind k);

struct DfgNode {
  int id = -1;
  std::string name;  // signal hierarchical name, op mnemonic, or constant literal, uniquified
  NodeKind kind = NodeKind::signal;
  std::optional<SourceSpan> span;
  std::string tag;   // filled by the attribute pass; empty until then
  int label = -1;    // 0 benign / 1 trojan; -1 until labeled
};

/// Directed data-flow graph. An edge (i, j) means node i depends on node j.
struct DataFlowGraph {
  std::vector<DfgNode> nodes;
  std::vector<std::pair<int, int>> edges;  // unique, sorted (i, then j)
  std::unordered_map<std::string, int> signal_index;  // signal name -> node id
  std::string tagset_version;  // set by the attribute pass

  int find_signal(const std::string& name) const {
    auto it = signal_index.find(name);
    return it == signal_index.end() ? -1 : it->second;
  }
  bool labeled() const {
    for (const auto& n : nodes) {
      if (n.label >= 0) return true;
    }
    return false;
  }
  /// children[i] = nodes i depends on; parents[i] = nodes depending on i.
  std::vector<std::vector<int>> children_lists() const;
  std::vector<std::vector<int>> parent_lists() const;
};

/// Uniquifier shared across one extraction: `xor` -> `xor_#0`, `xor_#1`, ...
class NamingContext {
 public:
  std::string unique_name(const std::string& base) {
    int n = counters_[base]++;
    return base + "_#" + std::to_string(n);
  }

 private:
  std::unordered_map<std::string, int> counters_;
};

/// One signal's dependency tree (a graph fragment rooted at the signal).
struct DepTree {
  DataFlowGraph graph;
  int root = -1;
};

/// Extract the dependency tree of one signal: children of an assignment are
/// the operation/constant/signal nodes of its right-hand side, and each
/// enclosing conditional scope contributes a branch node whose children are
/// (condition, then-value, implicit else = prior value of the signal).
/// Pure inputs yield a bare leaf; an undriven non-input signal raises
/// Error(unassigned_signal).
DepTree extract_signal_subgraph(const FlatDesign& design, const std::string& root,
                                NamingContext& ctx);

/// Trees for every declared signal, in declaration order, with one shared
/// naming context (undriven signals yield bare leaves).
std::vector<DepTree> extract_all(const FlatDesign& design);

/// Union of trees: signal nodes with equal names unify, operation/constant
/// nodes never unify (name collisions from foreign naming contexts are
/// re-uniquified deterministically).
DataFlowGraph merge_subgraphs(const std::vector<DepTree>& trees);

/// Drop nodes with no edges at all and re-densify ids.
/// Raises Error(empty_graph) if nothing remains.
DataFlowGraph prune_standalone(const DataFlowGraph& graph);

/// extract_all + merge + prune.
DataFlowGraph build_graph(const FlatDesign& design);

}  // namespace trojanscope
