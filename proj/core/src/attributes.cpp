#include "trojanscope/attributes.hpp"

#include <array>

namespace trojanscope {

namespace {

constexpr std::array<std::string_view, kTagCount> kTagNames = {
    "numeric",      "input",       "output",      "signal",      "and",
    "or",           "xor",         "xnor",        "not",         "nand",
    "nor",          "logical-and", "logical-or",  "logical-not", "reduce-or",
    "reduce-xor",   "eq",          "neq",         "lt",          "gt",
    "le",           "ge",          "plus",        "minus",       "times",
    "divide",       "mod",         "shift-left",  "shift-right", "concat",
    "part-select",  "branch",
};

}  // namespace

std::string_view tag_name(NodeTag t) { return kTagNames[static_cast<size_t>(t)]; }

std::optional<NodeTag> tag_from_name(std::string_view name) {
  for (size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<NodeTag>(i);
  }
  return std::nullopt;
}

NodeTag tag_node(const DfgNode& node, const FlatDesign& design) {
  switch (node.kind) {
    case NodeKind::constant:
      return NodeTag::numeric;
    case NodeKind::signal: {
      const FlatSignal* s = design.find(node.name);
      if (!s) {
        throw Error(Errc::internal_error, "graph signal '" + node.name + "' not in design");
      }
      if (s->kind == SignalKind::input) return NodeTag::input;
      if (s->kind == SignalKind::output) return NodeTag::output;
      return NodeTag::signal;
    }
    case NodeKind::operation: {
      // Mnemonic is the name up to the uniquifying suffix.
      size_t cut = node.name.rfind("_#");
      std::string_view mnemonic =
          cut == std::string::npos ? std::string_view(node.name)
                                   : std::string_view(node.name).substr(0, cut);
      auto t = tag_from_name(mnemonic);
      if (!t || *t == NodeTag::numeric || *t == NodeTag::input || *t == NodeTag::output ||
          *t == NodeTag::signal) {
        throw Error(Errc::unknown_operator,
                    "operation node '" + node.name + "' has no tag in the closed set");
      }
      return *t;
    }
  }
  throw Error(Errc::internal_error, "bad node kind");
}

void tag_all(DataFlowGraph& graph, const FlatDesign& design) {
  for (auto& node : graph.nodes) {
    node.tag = std::string(tag_name(tag_node(node, design)));
  }
  graph.tagset_version = std::string(kTagsetVersion);
}

NodeAttributeMatrix encode_attributes(const DataFlowGraph& graph) {
  NodeAttributeMatrix out;
  out.n = static_cast<int>(graph.nodes.size());
  out.x = Matrix(out.n, kTagCount);
  for (const auto& node : graph.nodes) {
    auto t = tag_from_name(node.tag);
    if (!t) {
      throw Error(Errc::unknown_operator,
                  "node '" + node.name + "' is untagged or carries an unknown tag '" +
                      node.tag + "'");
    }
    out.x.at(node.id, static_cast<int>(*t)) = 1.0;
  }
  return out;
}

}  // namespace trojanscope
