#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trojanscope/ast.hpp"
#include "trojanscope/dfg.hpp"

namespace trojanscope {

inline constexpr std::string_view kTrojanKeyword = "TJ";

/// Rename every signal declared inside a scoped module, and every
/// explicitly scoped signal ("module.signal" or a unique bare signal name),
/// with the `TJ_` prefix; scoped module names are renamed too and all
/// references follow. Raises Error(keyword_collision) if any pre-existing
/// identifier already contains the keyword, Error(unknown_scope_name) if a
/// scope entry matches nothing.
std::vector<HdlModule> mark_trojan_modules(const std::vector<HdlModule>& modules,
                                           const std::vector<std::string>& scope);

/// Text-level wrapper: parse, rename, pretty-print.
std::string mark_trojan_source(const std::string& source, const std::string& file,
                               const std::vector<std::string>& scope);

/// Working flags: 2 for operation/constant nodes, 1 for signal nodes whose
/// name contains the keyword, 0 otherwise.
std::vector<std::uint8_t> initial_flags(const DataFlowGraph& graph);

/// Algorithm-1 breadth-first propagation from the in-degree-0 roots:
/// finalized parents overwrite flag-2 children; flag-2 parents are
/// deferred. A stalled pass defaults surviving flag-2 nodes (op-only
/// cycles) to benign once; a second stall raises Error(non_termination).
std::vector<std::uint8_t> propagate_labels(const DataFlowGraph& graph,
                                           std::vector<std::uint8_t> flags);

/// initial_flags + propagate_labels, storing labels into the graph.
void label_graph(DataFlowGraph& graph);

}  // namespace trojanscope
