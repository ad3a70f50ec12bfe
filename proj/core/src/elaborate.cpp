#include "trojanscope/elaborate.hpp"

#include <algorithm>
#include <unordered_set>

#include "trojanscope/pretty.hpp"

namespace trojanscope {

namespace {

using ParamEnv = std::unordered_map<std::string, Expr::Const>;

unsigned checked_width(const BigUint& v, const SourceSpan& span, const char* what) {
  if (!v.fits_u64() || v.to_u64() > 4096) {
    throw Error(Errc::elaboration_error, span, std::string(what) + " out of range");
  }
  return static_cast<unsigned>(v.to_u64());
}

Expr const_expr(Expr::Const c, SourceSpan span) {
  Expr e;
  e.node = std::move(c);
  e.span = std::move(span);
  return e;
}

}  // namespace

Expr::Const fold_const_expr(const Expr& e, const ParamEnv& env) {
  if (e.is<Expr::Const>()) {
    const auto& c = e.as<Expr::Const>();
    if (!c.xmask.is_zero()) {
      throw Error(Errc::elaboration_error, e.span,
                  "x/z digits are only valid in casex labels");
    }
    return c;
  }
  if (e.is<Expr::Ident>()) {
    auto it = env.find(e.as<Expr::Ident>().name);
    if (it == env.end()) {
      throw Error(Errc::unsupported_construct, e.span,
                  "'" + e.as<Expr::Ident>().name + "' is not a constant (parameter) here");
    }
    return it->second;
  }
  if (e.is<Expr::Unary>()) {
    Expr::Const a = fold_const_expr(e.children[0], env);
    Expr::Const out;
    out.sized = true;
    switch (e.as<Expr::Unary>().op) {
      case UnaryOp::bit_not:
        out.width = a.width;
        out.sized = a.sized;
        out.value = a.value.complemented(a.width);
        return out;
      case UnaryOp::logical_not:
        out.width = 1;
        out.value = BigUint(a.value.is_zero() ? 1 : 0);
        return out;
      case UnaryOp::reduce_and:
        out.width = 1;
        out.value = BigUint(a.value.bit_length() >= a.width &&
                                    a.value == BigUint(1).operator<<(a.width) - BigUint(1)
                                ? 1
                                : 0);
        return out;
      case UnaryOp::reduce_or:
        out.width = 1;
        out.value = BigUint(a.value.is_zero() ? 0 : 1);
        return out;
      case UnaryOp::reduce_xor: {
        unsigned ones = 0;
        for (unsigned i = 0; i < a.width; ++i) ones += a.value.bit(i);
        out.width = 1;
        out.value = BigUint(ones & 1u);
        return out;
      }
      case UnaryOp::reduce_nand:
      case UnaryOp::reduce_nor:
      case UnaryOp::reduce_xnor: {
        Expr inner = e;
        inner.node = Expr::Unary{e.as<Expr::Unary>().op == UnaryOp::reduce_nand ? UnaryOp::reduce_and
                                 : e.as<Expr::Unary>().op == UnaryOp::reduce_nor ? UnaryOp::reduce_or
                                                                                 : UnaryOp::reduce_xor};
        Expr::Const r = fold_const_expr(inner, env);
        out.width = 1;
        out.value = BigUint(r.value.is_zero() ? 1 : 0);
        return out;
      }
      case UnaryOp::plus:
        return a;
      case UnaryOp::minus:
        out.width = a.width;
        out.sized = a.sized;
        out.value = BigUint::sub_wrapped(BigUint(0), a.value, a.width);
        return out;
    }
  }
  if (e.is<Expr::Binary>()) {
    Expr::Const a = fold_const_expr(e.children[0], env);
    Expr::Const b = fold_const_expr(e.children[1], env);
    Expr::Const out;
    unsigned w = std::max(a.width, b.width);
    bool sized = a.sized || b.sized;
    auto finish_arith = [&](BigUint v) {
      out.width = w;
      out.sized = sized;
      out.value = sized ? v.truncated(w) : std::move(v);
      return out;
    };
    auto bool_out = [&](bool v) {
      out.width = 1;
      out.sized = true;
      out.value = BigUint(v ? 1 : 0);
      return out;
    };
    switch (e.as<Expr::Binary>().op) {
      case BinaryOp::bit_and: return finish_arith(a.value & b.value);
      case BinaryOp::bit_or: return finish_arith(a.value | b.value);
      case BinaryOp::bit_xor: return finish_arith(a.value ^ b.value);
      case BinaryOp::bit_xnor: return finish_arith((a.value ^ b.value).complemented(w));
      case BinaryOp::logical_and: return bool_out(!a.value.is_zero() && !b.value.is_zero());
      case BinaryOp::logical_or: return bool_out(!a.value.is_zero() || !b.value.is_zero());
      case BinaryOp::eq: return bool_out(a.value == b.value);
      case BinaryOp::neq: return bool_out(a.value != b.value);
      case BinaryOp::lt: return bool_out(a.value < b.value);
      case BinaryOp::le: return bool_out(a.value <= b.value);
      case BinaryOp::gt: return bool_out(a.value > b.value);
      case BinaryOp::ge: return bool_out(a.value >= b.value);
      case BinaryOp::add: return finish_arith(a.value + b.value);
      case BinaryOp::sub:
        if (sized) return finish_arith(BigUint::sub_wrapped(a.value, b.value, w));
        return finish_arith(a.value - b.value);  // throws on underflow
      case BinaryOp::mul: return finish_arith(a.value * b.value);
      case BinaryOp::div: return finish_arith(a.value / b.value);
      case BinaryOp::mod: return finish_arith(a.value % b.value);
      case BinaryOp::shl:
        out.width = a.width;
        out.sized = a.sized;
        out.value = (a.value << checked_width(b.value, e.span, "shift amount")).truncated(
            a.sized ? a.width : 4096);
        return out;
      case BinaryOp::shr:
        out.width = a.width;
        out.sized = a.sized;
        out.value = a.value >> checked_width(b.value, e.span, "shift amount");
        return out;
    }
  }
  if (e.is<Expr::Ternary>()) {
    Expr::Const c = fold_const_expr(e.children[0], env);
    return fold_const_expr(c.value.is_zero() ? e.children[2] : e.children[1], env);
  }
  if (e.is<Expr::Concat>()) {
    Expr::Const out;
    out.sized = true;
    out.width = 0;
    for (const auto& part : e.children) {
      Expr::Const p = fold_const_expr(part, env);
      if (!p.sized) {
        throw Error(Errc::elaboration_error, part.span, "unsized constant in concatenation");
      }
      out.value = (out.value << p.width) | p.value.truncated(p.width);
      out.width += p.width;
    }
    return out;
  }
  if (e.is<Expr::Repeat>()) {
    Expr::Const count = fold_const_expr(e.children[0], env);
    Expr::Const item = fold_const_expr(e.children[1], env);
    if (!item.sized) {
      throw Error(Errc::elaboration_error, e.span, "unsized constant in replication");
    }
    unsigned n = checked_width(count.value, e.span, "replication count");
    Expr::Const out;
    out.sized = true;
    out.width = item.width * n;
    for (unsigned i = 0; i < n; ++i) {
      out.value = (out.value << item.width) | item.value.truncated(item.width);
    }
    return out;
  }
  throw Error(Errc::elaboration_error, e.span, "expression is not constant");
}

unsigned expr_width(const Expr& e, const FlatDesign& design) {
  if (e.is<Expr::Ident>()) {
    const FlatSignal* s = design.find(e.as<Expr::Ident>().name);
    if (!s) {
      throw Error(Errc::internal_error, e.span,
                  "unresolved signal '" + e.as<Expr::Ident>().name + "'");
    }
    return s->width;
  }
  if (e.is<Expr::Const>()) return e.as<Expr::Const>().width;
  if (e.is<Expr::Unary>()) {
    switch (e.as<Expr::Unary>().op) {
      case UnaryOp::bit_not:
      case UnaryOp::plus:
      case UnaryOp::minus:
        return expr_width(e.children[0], design);
      default:
        return 1;  // reductions and logical not
    }
  }
  if (e.is<Expr::Binary>()) {
    switch (e.as<Expr::Binary>().op) {
      case BinaryOp::logical_and:
      case BinaryOp::logical_or:
      case BinaryOp::eq:
      case BinaryOp::neq:
      case BinaryOp::lt:
      case BinaryOp::le:
      case BinaryOp::gt:
      case BinaryOp::ge:
        return 1;
      case BinaryOp::shl:
      case BinaryOp::shr:
        return expr_width(e.children[0], design);
      default:
        return std::max(expr_width(e.children[0], design), expr_width(e.children[1], design));
    }
  }
  if (e.is<Expr::Ternary>()) {
    return std::max(expr_width(e.children[1], design), expr_width(e.children[2], design));
  }
  if (e.is<Expr::Concat>()) {
    unsigned w = 0;
    for (const auto& c : e.children) w += expr_width(c, design);
    return w;
  }
  if (e.is<Expr::Repeat>()) {
    unsigned count = static_cast<unsigned>(e.children[0].as<Expr::Const>().value.to_u64());
    return count * expr_width(e.children[1], design);
  }
  if (e.is<Expr::BitSelect>()) return 1;
  // PartSelect: bounds are folded constants after elaboration.
  const auto& msb = e.children[1].as<Expr::Const>().value;
  const auto& lsb = e.children[2].as<Expr::Const>().value;
  return static_cast<unsigned>(msb.to_u64() - lsb.to_u64() + 1);
}

namespace {

class Elaborator {
 public:
  Elaborator(const std::vector<HdlModule>& modules, const ElaborateOptions& options,
             std::vector<Warning>* warnings)
      : options_(options), warnings_(warnings) {
    for (const auto& m : modules) by_name_[m.name] = &m;
  }

  FlatDesign run(const std::string& top) {
    auto it = by_name_.find(top);
    if (it == by_name_.end()) {
      throw Error(Errc::unknown_module, "unknown module '" + top + "'");
    }
    out_.top = top;
    std::vector<std::string> stack{top};
    instantiate(*it->second, "", {}, stack, /*is_top=*/true);
    return std::move(out_);
  }

 private:
  const ElaborateOptions& options_;
  std::vector<Warning>* warnings_;
  std::unordered_map<std::string, const HdlModule*> by_name_;
  FlatDesign out_;

  void warn(const SourceSpan& span, std::string message) {
    if (options_.strict) {
      throw Error(Errc::width_mismatch, span, std::move(message));
    }
    if (warnings_) warnings_->push_back(Warning{span, std::move(message)});
  }

  void declare(std::string name, SignalKind kind, bool is_reg, unsigned width, SourceSpan span,
               const std::string& origin) {
    if (out_.signal_index.contains(name)) {
      throw Error(Errc::elaboration_error, span, "hierarchical name collision: '" + name + "'");
    }
    out_.signal_index[name] = static_cast<int>(out_.signals.size());
    out_.signals.push_back(FlatSignal{std::move(name), kind, width, std::move(span), origin, is_reg});
  }

  unsigned range_width(const Range& r, const ParamEnv& env, const SourceSpan& span) {
    if (r.is_scalar()) return 1;
    Expr::Const msb = fold_const_expr(*r.msb, env);
    Expr::Const lsb = fold_const_expr(*r.lsb, env);
    if (!lsb.value.is_zero()) {
      throw Error(Errc::unsupported_construct, span,
                  "declaration ranges must be [msb:0] in the supported subset");
    }
    unsigned m = checked_width(msb.value, span, "range bound");
    return m + 1;
  }

  // ---- reference rewriting ----

  Expr rewrite_expr(const Expr& e, const std::string& prefix, const ParamEnv& env,
                    bool casex_label = false) {
    if (e.is<Expr::Ident>()) {
      auto it = env.find(e.as<Expr::Ident>().name);
      if (it != env.end()) return const_expr(it->second, e.span);
      Expr out = e;
      out.node = Expr::Ident{prefix + e.as<Expr::Ident>().name};
      return out;
    }
    if (e.is<Expr::Const>()) {
      if (!e.as<Expr::Const>().xmask.is_zero() && !casex_label) {
        throw Error(Errc::unsupported_construct, e.span,
                    "x/z digits are only valid in casex labels");
      }
      return e;
    }
    Expr out = e;
    out.children.clear();
    if (e.is<Expr::PartSelect>()) {
      out.children.push_back(rewrite_expr(e.children[0], prefix, env));
      out.children.push_back(const_expr(fold_const_expr(e.children[1], env), e.children[1].span));
      out.children.push_back(const_expr(fold_const_expr(e.children[2], env), e.children[2].span));
      return out;
    }
    if (e.is<Expr::Repeat>()) {
      out.children.push_back(const_expr(fold_const_expr(e.children[0], env), e.children[0].span));
      out.children.push_back(rewrite_expr(e.children[1], prefix, env));
      return out;
    }
    for (const auto& c : e.children) out.children.push_back(rewrite_expr(c, prefix, env));
    return out;
  }

  std::vector<Stmt> rewrite_body(const std::vector<Stmt>& body, const std::string& prefix,
                                 const ParamEnv& env) {
    std::vector<Stmt> out;
    out.reserve(body.size());
    for (const auto& s : body) {
      Stmt ns;
      ns.span = s.span;
      if (s.is<Stmt::Assign>()) {
        const auto& a = s.as<Stmt::Assign>();
        Stmt::Assign na;
        na.nonblocking = a.nonblocking;
        na.lhs = rewrite_expr(a.lhs, prefix, env);
        na.rhs = rewrite_expr(a.rhs, prefix, env);
        ns.node = std::move(na);
      } else if (s.is<Stmt::If>()) {
        const auto& i = s.as<Stmt::If>();
        Stmt::If ni;
        ni.cond = rewrite_expr(i.cond, prefix, env);
        ni.then_body = rewrite_body(i.then_body, prefix, env);
        ni.else_body = rewrite_body(i.else_body, prefix, env);
        ns.node = std::move(ni);
      } else {
        const auto& c = s.as<Stmt::Case>();
        Stmt::Case nc;
        nc.casex = c.casex;
        nc.selector = rewrite_expr(c.selector, prefix, env);
        for (const auto& item : c.items) {
          Stmt::Case::Item ni;
          ni.is_default = item.is_default;
          for (const auto& l : item.labels) {
            // Labels must fold to constants; casex labels may carry x bits.
            if (l.is<Expr::Const>()) {
              if (!l.as<Expr::Const>().xmask.is_zero() && !c.casex) {
                throw Error(Errc::unsupported_construct, l.span,
                            "x/z digits are only valid in casex labels");
              }
              ni.labels.push_back(l);
            } else {
              ni.labels.push_back(const_expr(fold_const_expr(l, env), l.span));
            }
          }
          ni.body = rewrite_body(item.body, prefix, env);
          nc.items.push_back(std::move(ni));
        }
        ns.node = std::move(nc);
      }
      out.push_back(std::move(ns));
    }
    return out;
  }

  // ---- instance handling ----

  static bool is_lvalue(const Expr& e) {
    if (e.is<Expr::Ident>() || e.is<Expr::BitSelect>() || e.is<Expr::PartSelect>()) return true;
    if (e.is<Expr::Concat>()) {
      return std::all_of(e.children.begin(), e.children.end(),
                         [](const Expr& c) { return is_lvalue(c); });
    }
    return false;
  }

  void instantiate(const HdlModule& mod, const std::string& prefix, const ParamEnv& overrides,
                   std::vector<std::string>& stack, bool is_top) {
    // Parameter environment: overrides win for non-local parameters.
    ParamEnv env;
    for (const auto& p : mod.params) {
      auto it = overrides.find(p.name);
      if (!p.local && it != overrides.end()) {
        env[p.name] = it->second;
      } else {
        env[p.name] = fold_const_expr(p.value, env);
      }
    }

    for (const auto& p : mod.ports) {
      SignalKind kind;
      if (is_top) {
        kind = p.dir == PortDir::output ? SignalKind::output : SignalKind::input;
      } else {
        kind = p.kind == NetKind::reg ? SignalKind::reg : SignalKind::wire;
      }
      declare(prefix + p.name, kind, p.kind == NetKind::reg,
              range_width(p.range, env, p.span), p.span, mod.name);
    }
    for (const auto& n : mod.nets) {
      declare(prefix + n.name, n.kind == NetKind::reg ? SignalKind::reg : SignalKind::wire,
              n.kind == NetKind::reg, range_width(n.range, env, n.span), n.span, mod.name);
    }

    std::unordered_set<std::string> instance_names;
    for (const auto& item : mod.items) {
      if (item.is<ContinuousAssign>()) {
        const auto& ca = item.as<ContinuousAssign>();
        ContinuousAssign nc;
        nc.lhs = rewrite_expr(ca.lhs, prefix, env);
        nc.rhs = rewrite_expr(ca.rhs, prefix, env);
        HdlItem ni;
        ni.node = std::move(nc);
        ni.span = item.span;
        out_.items.push_back(std::move(ni));
      } else if (item.is<AlwaysBlock>()) {
        const auto& blk = item.as<AlwaysBlock>();
        AlwaysBlock nb;
        nb.combinational = blk.combinational;
        for (const auto& ev : blk.edges) {
          AlwaysBlock::EdgeEvent ne = ev;
          ne.signal = prefix + ev.signal;
          nb.edges.push_back(std::move(ne));
        }
        nb.body = rewrite_body(blk.body, prefix, env);
        HdlItem ni;
        ni.node = std::move(nb);
        ni.span = item.span;
        out_.items.push_back(std::move(ni));
      } else {
        elaborate_instance(item, mod, prefix, env, stack, instance_names);
      }
    }
  }

  void elaborate_instance(const HdlItem& item, const HdlModule& parent, const std::string& prefix,
                          const ParamEnv& env, std::vector<std::string>& stack,
                          std::unordered_set<std::string>& instance_names) {
    const auto& inst = item.as<ModuleInstance>();
    auto it = by_name_.find(inst.module_name);
    if (it == by_name_.end()) {
      throw Error(Errc::unknown_module, item.span,
                  "unknown module '" + inst.module_name + "'");
    }
    const HdlModule& child = *it->second;

    if (std::find(stack.begin(), stack.end(), child.name) != stack.end()) {
      std::string cycle;
      for (const auto& s : stack) cycle += s + " -> ";
      throw Error(Errc::recursive_instantiation, item.span,
                  "recursive instantiation: " + cycle + child.name);
    }
    if (!instance_names.insert(inst.instance_name).second) {
      throw Error(Errc::elaboration_error, item.span,
                  "duplicate instance name '" + inst.instance_name + "' in " + parent.name);
    }

    // Fold parameter overrides in the parent environment.
    ParamEnv child_overrides;
    if (!inst.param_overrides.empty() && inst.param_overrides[0].name.empty()) {
      // positional: bind in child's non-local declaration order
      std::vector<const ParamDecl*> formals;
      for (const auto& p : child.params) {
        if (!p.local) formals.push_back(&p);
      }
      if (inst.param_overrides.size() > formals.size()) {
        throw Error(Errc::port_arity_mismatch, item.span,
                    "too many parameter overrides for '" + child.name + "'");
      }
      for (size_t i = 0; i < inst.param_overrides.size(); ++i) {
        child_overrides[formals[i]->name] = fold_const_expr(inst.param_overrides[i].value, env);
      }
    } else {
      for (const auto& ov : inst.param_overrides) {
        if (!child.find_param(ov.name)) {
          throw Error(Errc::elaboration_error, item.span,
                      "module '" + child.name + "' has no parameter '" + ov.name + "'");
        }
        child_overrides[ov.name] = fold_const_expr(ov.value, env);
      }
    }

    // Resolve connections to per-port actuals.
    std::vector<const Expr*> actuals(child.ports.size(), nullptr);
    std::vector<Expr> rewritten;
    rewritten.reserve(inst.connections.size());
    if (inst.named_connections) {
      std::unordered_set<std::string> seen;
      for (const auto& conn : inst.connections) {
        if (!seen.insert(conn.port).second) {
          throw Error(Errc::port_arity_mismatch, conn.span,
                      "port '" + conn.port + "' connected twice");
        }
        const Port* p = child.find_port(conn.port);
        if (!p) {
          throw Error(Errc::port_arity_mismatch, conn.span,
                      "module '" + child.name + "' has no port '" + conn.port + "'");
        }
        if (!conn.actual) continue;
        rewritten.push_back(rewrite_expr(*conn.actual, prefix, env));
        actuals[static_cast<size_t>(p - child.ports.data())] = &rewritten.back();
      }
    } else {
      if (inst.connections.size() != child.ports.size()) {
        throw Error(Errc::port_arity_mismatch, item.span,
                    "instance '" + inst.instance_name + "' of '" + child.name + "' expects " +
                        std::to_string(child.ports.size()) + " connections, found " +
                        std::to_string(inst.connections.size()));
      }
      for (size_t i = 0; i < inst.connections.size(); ++i) {
        if (!inst.connections[i].actual) continue;
        rewritten.push_back(rewrite_expr(*inst.connections[i].actual, prefix, env));
        actuals[i] = &rewritten.back();
      }
    }

    std::string child_prefix = prefix + inst.instance_name + ".";
    stack.push_back(child.name);
    instantiate(child, child_prefix, child_overrides, stack, /*is_top=*/false);
    stack.pop_back();

    // Realize connections as continuous assigns.
    for (size_t i = 0; i < child.ports.size(); ++i) {
      if (!actuals[i]) continue;
      const Port& p = child.ports[i];
      const Expr& actual = *actuals[i];
      std::string formal_name = child_prefix + p.name;
      const FlatSignal* formal = out_.find(formal_name);
      unsigned wa = expr_width(actual, out_);
      if (wa != formal->width) {
        warn(inst.connections.empty() ? item.span : actual.span,
             "connection width mismatch on " + formal_name + ": formal is " +
                 std::to_string(formal->width) + " bits, actual is " + std::to_string(wa) +
                 " bits");
      }

      Expr formal_ref;
      formal_ref.node = Expr::Ident{formal_name};
      formal_ref.span = p.span;

      ContinuousAssign ca;
      if (p.dir == PortDir::input) {
        ca.lhs = std::move(formal_ref);
        ca.rhs = actual;
      } else if (p.dir == PortDir::output) {
        if (!is_lvalue(actual)) {
          throw Error(Errc::elaboration_error, actual.span,
                      "output port connection must be assignable");
        }
        ca.lhs = actual;
        ca.rhs = std::move(formal_ref);
      } else {
        throw Error(Errc::unsupported_construct, item.span,
                    "inout port connections are out of subset");
      }
      HdlItem ni;
      ni.node = std::move(ca);
      ni.span = item.span;
      out_.items.push_back(std::move(ni));
    }
  }
};

}  // namespace

FlatDesign elaborate(const std::vector<HdlModule>& modules, const std::string& top,
                     const ElaborateOptions& options, std::vector<Warning>* warnings) {
  return Elaborator(modules, options, warnings).run(top);
}

namespace {

// Substitute parameters with folded constants, leave signal names alone.
Expr substitute_params(const Expr& e, const ParamEnv& env) {
  if (e.is<Expr::Ident>()) {
    auto it = env.find(e.as<Expr::Ident>().name);
    if (it != env.end()) return const_expr(it->second, e.span);
    return e;
  }
  Expr out = e;
  out.children.clear();
  for (const auto& c : e.children) out.children.push_back(substitute_params(c, env));
  return out;
}

}  // namespace

ShallowModule elaborate_shallow(const HdlModule& mod, const ParamEnv& overrides) {
  HdlModule stripped = mod;
  stripped.items.clear();
  std::vector<ModuleInstance> instances;
  for (const auto& item : mod.items) {
    if (item.is<ModuleInstance>()) {
      instances.push_back(item.as<ModuleInstance>());
    } else {
      stripped.items.push_back(item);
    }
  }

  // Fold the parameter environment with overrides applied, then inject the
  // folded values as the defaults so a plain single-module elaboration of
  // the stripped copy sees the right constants.
  ParamEnv env;
  for (const auto& p : stripped.params) {
    auto it = overrides.find(p.name);
    if (!p.local && it != overrides.end()) {
      env[p.name] = it->second;
    } else {
      env[p.name] = fold_const_expr(p.value, env);
    }
  }
  for (auto& p : stripped.params) {
    p.value = const_expr(env[p.name], p.span);
  }

  std::vector<HdlModule> one{stripped};
  ShallowModule out;
  out.local = Elaborator(one, ElaborateOptions{}, nullptr).run(stripped.name);

  for (const auto& inst : instances) {
    ModuleInstance folded = inst;
    for (auto& ov : folded.param_overrides) {
      ov.value = const_expr(fold_const_expr(ov.value, env), ov.value.span);
    }
    for (auto& conn : folded.connections) {
      if (conn.actual) conn.actual = substitute_params(*conn.actual, env);
    }
    out.instances.push_back(std::move(folded));
  }
  return out;
}

std::string dump_flat(const FlatDesign& design) {
  HdlModule mod;
  mod.name = design.top;
  for (const auto& s : design.signals) {
    Range r;
    if (s.width > 1) {
      Expr::Const msb;
      msb.value = BigUint(s.width - 1);
      msb.width = 32;
      msb.sized = false;
      r.msb = const_expr(msb, s.span);
      Expr::Const lsb;
      lsb.value = BigUint(0);
      lsb.width = 32;
      lsb.sized = false;
      r.lsb = const_expr(lsb, s.span);
    }
    if (s.kind == SignalKind::input || s.kind == SignalKind::output) {
      Port p;
      p.name = s.name;
      p.dir = s.kind == SignalKind::input ? PortDir::input : PortDir::output;
      p.range = r;
      p.kind = s.is_reg ? NetKind::reg : NetKind::wire;
      p.span = s.span;
      mod.ports.push_back(std::move(p));
    } else {
      NetDecl d;
      d.name = s.name;
      d.kind = s.is_reg || s.kind == SignalKind::reg ? NetKind::reg : NetKind::wire;
      d.range = r;
      d.span = s.span;
      mod.nets.push_back(std::move(d));
    }
  }
  mod.items = design.items;
  return print_module(mod);
}

}  // namespace trojanscope
