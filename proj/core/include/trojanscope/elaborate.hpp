#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "trojanscope/ast.hpp"

namespace trojanscope {

enum class SignalKind { input, output, wire, reg };

struct FlatSignal {
  std::string name;  // hierarchical, `instance.signal`
  SignalKind kind = SignalKind::wire;
  unsigned width = 1;
  SourceSpan span;
  std::string origin_module;
  bool is_reg = false;  // procedural target; kept for faithful re-printing
};

/// A fully flattened design: no instances remain, every reference is a
/// hierarchical name, every parameter and constant bound is folded.
struct FlatDesign {
  std::string top;
  std::vector<FlatSignal> signals;
  std::vector<HdlItem> items;  // ContinuousAssign / AlwaysBlock only
  std::unordered_map<std::string, int> signal_index;

  const FlatSignal* find(const std::string& name) const {
    auto it = signal_index.find(name);
    return it == signal_index.end() ? nullptr : &signals[static_cast<size_t>(it->second)];
  }
};

struct ElaborateOptions {
  bool strict = false;  // width mismatches on port connections become errors
};

/// Inline the instance hierarchy under `top` depth-first, prefixing
/// instance-local names with `instanceName.`, folding parameters
/// per-instance, and realizing port connections as continuous assigns
/// (into the formal for inputs, outward for outputs).
FlatDesign elaborate(const std::vector<HdlModule>& modules, const std::string& top,
                     const ElaborateOptions& options = {},
                     std::vector<Warning>* warnings = nullptr);

/// Render the flattened design back as subset Verilog (hierarchical names
/// print as escaped identifiers). Deterministic; used by --dump-flat.
std::string dump_flat(const FlatDesign& design);

/// Self-determined width of an elaborated expression.
unsigned expr_width(const Expr& e, const FlatDesign& design);

/// Fold a constant expression in a parameter environment. Exposed for the
/// shallow elaboration used by the hierarchical reference simulator.
Expr::Const fold_const_expr(const Expr& e,
                            const std::unordered_map<std::string, Expr::Const>& env);

/// One level of elaboration for a single module: parameters folded and
/// selects resolved, but instances kept (listed separately). Signal names
/// are left unprefixed. The reference co-simulator composes these shallow
/// views to get a pre-elaboration behavioral baseline.
struct ShallowModule {
  FlatDesign local;  // the module's own signals and assign/always items
  std::vector<ModuleInstance> instances;  // overrides folded, actuals resolved
};
ShallowModule elaborate_shallow(const HdlModule& mod,
                                const std::unordered_map<std::string, Expr::Const>& overrides);

}  // namespace trojanscope
