#pragma once

#include <string>
#include <vector>

#include "trojanscope/ast.hpp"

namespace trojanscope {

/// Render an expression with minimal parentheses (precedence-aware, so
/// re-parsing reconstructs the same tree).
std::string print_expr(const Expr& e);

/// Canonical subset-Verilog rendering of a module / module list.
/// Deterministic: the same AST always prints to the same bytes.
std::string print_module(const HdlModule& mod);
std::string print_modules(const std::vector<HdlModule>& mods);

/// Constant rendering used both by the printer and for constant node names
/// in the data-flow graph: `W'hXX` for sized values, plain decimal for
/// unsized, binary with x digits when a wildcard mask is present.
std::string render_const(const Expr::Const& c);

}  // namespace trojanscope
