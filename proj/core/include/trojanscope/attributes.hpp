#pragma once

#include "trojanscope/dfg.hpp"
#include "trojanscope/matrix.hpp"
#include "trojanscope/node_tags.hpp"

namespace trojanscope {

/// Tag one node: constants are `numeric` regardless of value, signals map
/// by their position in the circuit (top-level port direction), operation
/// nodes by the mnemonic encoded in their name. An operation mnemonic
/// outside the closed set raises Error(unknown_operator) — that is a
/// front-end bug, not user error.
NodeTag tag_node(const DfgNode& node, const FlatDesign& design);

/// Tag every node in place and stamp the graph with kTagsetVersion.
void tag_all(DataFlowGraph& graph, const FlatDesign& design);

/// X is N×32 one-hot; the adjacency stays as the graph's edge list.
struct NodeAttributeMatrix {
  Matrix x;
  int n = 0;
};

/// One-hot encode the stored tags (graph must be tagged).
NodeAttributeMatrix encode_attributes(const DataFlowGraph& graph);

}  // namespace trojanscope
