#include "trojanscope/interpreter.hpp"

#include <unordered_map>

namespace trojanscope {

namespace {

std::uint64_t width_mask(unsigned width) {
  return width >= 64 ? ~0ull : ((1ull << width) - 1);
}

}  // namespace

Interpreter::Interpreter(const FlatDesign& design) : design_(&design) {
  for (const auto& s : design.signals) {
    if (s.width > 64) {
      throw Error(Errc::elaboration_error, s.span,
                  "signal '" + s.name + "' is wider than 64 bits; the reference interpreter "
                  "only handles narrow fixtures");
    }
  }
  values_.assign(design.signals.size(), 0);
  for (const auto& item : design.items) {
    if (item.is<ContinuousAssign>()) {
      comb_items_.push_back(&item);
    } else if (item.is<AlwaysBlock>()) {
      const auto& blk = item.as<AlwaysBlock>();
      if (blk.combinational) {
        comb_items_.push_back(&item);
      } else {
        edge_blocks_.push_back(&blk);
      }
    } else {
      throw Error(Errc::internal_error, item.span, "instance survived elaboration");
    }
  }
}

int Interpreter::index_of(const std::string& name) const {
  auto it = design_->signal_index.find(name);
  if (it == design_->signal_index.end()) {
    throw Error(Errc::internal_error, "unknown signal '" + name + "'");
  }
  return it->second;
}

std::uint64_t Interpreter::mask_of(int idx) const {
  return width_mask(design_->signals[static_cast<size_t>(idx)].width);
}

void Interpreter::set(const std::string& name, std::uint64_t value) {
  int idx = index_of(name);
  values_[static_cast<size_t>(idx)] = value & mask_of(idx);
}

std::uint64_t Interpreter::get(const std::string& name) const {
  return values_[static_cast<size_t>(index_of(name))];
}

std::uint64_t Interpreter::eval(const Expr& e) const {
  if (e.is<Expr::Ident>()) {
    return values_[static_cast<size_t>(index_of(e.as<Expr::Ident>().name))];
  }
  if (e.is<Expr::Const>()) {
    const auto& c = e.as<Expr::Const>();
    if (c.width > 64) {
      throw Error(Errc::elaboration_error, e.span, "constant wider than 64 bits in fixture");
    }
    return c.value.to_u64() & width_mask(c.width);
  }
  if (e.is<Expr::Unary>()) {
    unsigned w = expr_width(e.children[0], *design_);
    std::uint64_t a = eval(e.children[0]);
    switch (e.as<Expr::Unary>().op) {
      case UnaryOp::bit_not: return ~a & width_mask(w);
      case UnaryOp::logical_not: return a == 0 ? 1 : 0;
      case UnaryOp::reduce_and: return a == width_mask(w) ? 1 : 0;
      case UnaryOp::reduce_or: return a != 0 ? 1 : 0;
      case UnaryOp::reduce_xor: return static_cast<std::uint64_t>(__builtin_parityll(a));
      case UnaryOp::reduce_nand: return a == width_mask(w) ? 0 : 1;
      case UnaryOp::reduce_nor: return a != 0 ? 0 : 1;
      case UnaryOp::reduce_xnor: return static_cast<std::uint64_t>(!__builtin_parityll(a));
      case UnaryOp::plus: return a;
      case UnaryOp::minus: return (~a + 1) & width_mask(w);
    }
  }
  if (e.is<Expr::Binary>()) {
    std::uint64_t a = eval(e.children[0]);
    std::uint64_t b = eval(e.children[1]);
    unsigned wl = expr_width(e.children[0], *design_);
    unsigned wr = expr_width(e.children[1], *design_);
    std::uint64_t m = width_mask(std::max(wl, wr));
    switch (e.as<Expr::Binary>().op) {
      case BinaryOp::bit_and: return a & b;
      case BinaryOp::bit_or: return a | b;
      case BinaryOp::bit_xor: return a ^ b;
      case BinaryOp::bit_xnor: return ~(a ^ b) & m;
      case BinaryOp::logical_and: return (a != 0 && b != 0) ? 1 : 0;
      case BinaryOp::logical_or: return (a != 0 || b != 0) ? 1 : 0;
      case BinaryOp::eq: return a == b ? 1 : 0;
      case BinaryOp::neq: return a != b ? 1 : 0;
      case BinaryOp::lt: return a < b ? 1 : 0;
      case BinaryOp::le: return a <= b ? 1 : 0;
      case BinaryOp::gt: return a > b ? 1 : 0;
      case BinaryOp::ge: return a >= b ? 1 : 0;
      case BinaryOp::add: return (a + b) & m;
      case BinaryOp::sub: return (a - b) & m;
      case BinaryOp::mul: return (a * b) & m;
      case BinaryOp::div: return b == 0 ? 0 : a / b;
      case BinaryOp::mod: return b == 0 ? 0 : a % b;
      case BinaryOp::shl: return b >= 64 ? 0 : (a << b) & width_mask(wl);
      case BinaryOp::shr: return b >= 64 ? 0 : a >> b;
    }
  }
  if (e.is<Expr::Ternary>()) {
    return eval(e.children[0]) != 0 ? eval(e.children[1]) : eval(e.children[2]);
  }
  if (e.is<Expr::Concat>()) {
    std::uint64_t out = 0;
    for (const auto& part : e.children) {
      unsigned w = expr_width(part, *design_);
      out = (out << w) | (eval(part) & width_mask(w));
    }
    return out;
  }
  if (e.is<Expr::Repeat>()) {
    unsigned count = static_cast<unsigned>(e.children[0].as<Expr::Const>().value.to_u64());
    unsigned w = expr_width(e.children[1], *design_);
    std::uint64_t v = eval(e.children[1]) & width_mask(w);
    std::uint64_t out = 0;
    for (unsigned i = 0; i < count; ++i) out = (out << w) | v;
    return out;
  }
  if (e.is<Expr::BitSelect>()) {
    std::uint64_t base = eval(e.children[0]);
    std::uint64_t idx = eval(e.children[1]);
    return idx >= 64 ? 0 : (base >> idx) & 1;
  }
  // PartSelect
  std::uint64_t base = eval(e.children[0]);
  std::uint64_t msb = e.children[1].as<Expr::Const>().value.to_u64();
  std::uint64_t lsb = e.children[2].as<Expr::Const>().value.to_u64();
  return (base >> lsb) & width_mask(static_cast<unsigned>(msb - lsb + 1));
}

bool Interpreter::exec_assign(const Expr& lhs, std::uint64_t value, bool nonblocking,
                              bool in_edge_block) {
  // Nonblocking outside an edge block (a @(*) body) degrades to blocking;
  // blocking inside an edge block writes a block-local overlay that commits
  // with the staged updates.
  if (lhs.is<Expr::Concat>()) {
    bool changed = false;
    unsigned total = expr_width(lhs, *design_);
    unsigned used = 0;
    for (const auto& part : lhs.children) {
      unsigned w = expr_width(part, *design_);
      used += w;
      std::uint64_t piece = (value >> (total - used)) & width_mask(w);
      changed |= exec_assign(part, piece, nonblocking, in_edge_block);
    }
    return changed;
  }

  int sig;
  std::uint64_t mask, bits;
  if (lhs.is<Expr::Ident>()) {
    sig = index_of(lhs.as<Expr::Ident>().name);
    mask = mask_of(sig);
    bits = (value & mask);
  } else if (lhs.is<Expr::BitSelect>()) {
    sig = index_of(lhs.children[0].as<Expr::Ident>().name);
    std::uint64_t idx = eval(lhs.children[1]);
    if (idx >= design_->signals[static_cast<size_t>(sig)].width) return false;
    mask = 1ull << idx;
    bits = (value & 1ull) << idx;
  } else if (lhs.is<Expr::PartSelect>()) {
    sig = index_of(lhs.children[0].as<Expr::Ident>().name);
    std::uint64_t msb = lhs.children[1].as<Expr::Const>().value.to_u64();
    std::uint64_t lsb = lhs.children[2].as<Expr::Const>().value.to_u64();
    std::uint64_t w = msb - lsb + 1;
    mask = width_mask(static_cast<unsigned>(w)) << lsb;
    bits = (value & width_mask(static_cast<unsigned>(w))) << lsb;
  } else {
    throw Error(Errc::internal_error, lhs.span, "unsupported lvalue shape");
  }

  if (in_edge_block) {
    staged_.push_back(Staged{sig, mask, bits});
    if (!nonblocking) {
      // Blocking in an edge block is also visible to later statements.
      auto& slot = values_[static_cast<size_t>(sig)];
      slot = (slot & ~mask) | bits;
    }
    return false;
  }

  auto& slot = values_[static_cast<size_t>(sig)];
  std::uint64_t next = (slot & ~mask) | bits;
  if (next == slot) return false;
  slot = next;
  return true;
}

bool Interpreter::exec_body(const std::vector<Stmt>& body, bool in_edge_block) {
  bool changed = false;
  for (const auto& s : body) {
    if (s.is<Stmt::Assign>()) {
      const auto& a = s.as<Stmt::Assign>();
      changed |= exec_assign(a.lhs, eval(a.rhs), a.nonblocking, in_edge_block);
    } else if (s.is<Stmt::If>()) {
      const auto& i = s.as<Stmt::If>();
      if (eval(i.cond) != 0) {
        changed |= exec_body(i.then_body, in_edge_block);
      } else {
        changed |= exec_body(i.else_body, in_edge_block);
      }
    } else {
      const auto& c = s.as<Stmt::Case>();
      std::uint64_t sel = eval(c.selector);
      const Stmt::Case::Item* hit = nullptr;
      for (const auto& item : c.items) {
        if (item.is_default) continue;
        for (const auto& label : item.labels) {
          const auto& lc = label.as<Expr::Const>();
          std::uint64_t wild = lc.xmask.is_zero() ? 0 : lc.xmask.to_u64();
          std::uint64_t lv = lc.value.to_u64();
          std::uint64_t m = width_mask(lc.width) & ~wild;
          if ((sel & m) == (lv & m)) {
            hit = &item;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) {
        for (const auto& item : c.items) {
          if (item.is_default) {
            hit = &item;
            break;
          }
        }
      }
      if (hit) changed |= exec_body(hit->body, in_edge_block);
    }
  }
  return changed;
}

void Interpreter::settle() {
  size_t cap = design_->signals.size() + comb_items_.size() + 2;
  for (size_t iter = 0; iter <= cap; ++iter) {
    bool changed = false;
    for (const HdlItem* item : comb_items_) {
      if (item->is<ContinuousAssign>()) {
        const auto& ca = item->as<ContinuousAssign>();
        changed |= exec_assign(ca.lhs, eval(ca.rhs), false, false);
      } else {
        changed |= exec_body(item->as<AlwaysBlock>().body, false);
      }
    }
    if (!changed) return;
  }
  throw Error(Errc::combinational_loop,
              "combinational logic did not settle within " +
                  std::to_string(design_->signals.size() + comb_items_.size() + 2) +
                  " iterations");
}

void Interpreter::tick_stage() {
  // All edge blocks read the same pre-edge state, modulo their own blocking
  // writes. Re-read order equals item order, which is deterministic.
  std::vector<std::uint64_t> pre = values_;
  for (const AlwaysBlock* blk : edge_blocks_) {
    exec_body(blk->body, true);
    values_ = pre;  // discard block-local blocking overlay between blocks
  }
}

void Interpreter::tick_commit() {
  for (const auto& st : staged_) {
    auto& slot = values_[static_cast<size_t>(st.signal)];
    slot = (slot & ~st.mask) | st.bits;
  }
  staged_.clear();
}

std::map<std::string, std::uint64_t> Interpreter::outputs() const {
  std::map<std::string, std::uint64_t> out;
  for (size_t i = 0; i < design_->signals.size(); ++i) {
    if (design_->signals[i].kind == SignalKind::output) {
      out[design_->signals[i].name] = values_[i];
    }
  }
  return out;
}

bool Interpreter::poke_lvalue(const Expr& lhs, std::uint64_t value) {
  return exec_assign(lhs, value, false, false);
}

std::vector<std::map<std::string, std::uint64_t>> run_trace(
    const FlatDesign& design, const std::vector<std::map<std::string, std::uint64_t>>& inputs) {
  Interpreter sim(design);
  std::vector<std::map<std::string, std::uint64_t>> out;
  for (const auto& step : inputs) {
    for (const auto& [name, value] : step) sim.set(name, value);
    sim.settle();
    out.push_back(sim.outputs());
    sim.tick();
  }
  return out;
}

// ---- hierarchical co-simulation ----

struct HierSim::Impl {
  ShallowModule shallow;
  Interpreter interp;
  struct Child {
    std::unique_ptr<Impl> sim;
    const ModuleInstance* inst;  // points into shallow.instances
    std::vector<std::pair<const Port*, const Expr*>> inputs;   // formal, actual
    std::vector<std::pair<const Port*, const Expr*>> outputs;  // formal, actual lvalue
  };
  std::vector<Child> children;
  const HdlModule* mod;
  size_t total_signals;

  Impl(const std::unordered_map<std::string, const HdlModule*>& by_name, const HdlModule& m,
       const std::unordered_map<std::string, Expr::Const>& overrides)
      : shallow(elaborate_shallow(m, overrides)), interp(shallow.local), mod(&m) {
    total_signals = shallow.local.signals.size();
    for (const auto& inst : shallow.instances) {
      auto it = by_name.find(inst.module_name);
      if (it == by_name.end()) {
        throw Error(Errc::unknown_module, "unknown module '" + inst.module_name + "'");
      }
      const HdlModule& child_mod = *it->second;

      std::unordered_map<std::string, Expr::Const> child_overrides;
      if (!inst.param_overrides.empty() && inst.param_overrides[0].name.empty()) {
        std::vector<const ParamDecl*> formals;
        for (const auto& p : child_mod.params) {
          if (!p.local) formals.push_back(&p);
        }
        for (size_t i = 0; i < inst.param_overrides.size() && i < formals.size(); ++i) {
          child_overrides[formals[i]->name] = inst.param_overrides[i].value.as<Expr::Const>();
        }
      } else {
        for (const auto& ov : inst.param_overrides) {
          child_overrides[ov.name] = ov.value.as<Expr::Const>();
        }
      }

      Child c;
      c.sim = std::make_unique<Impl>(by_name, child_mod, child_overrides);
      c.inst = &inst;
      if (inst.named_connections || inst.connections.empty()) {
        for (const auto& conn : inst.connections) {
          if (!conn.actual) continue;
          const Port* p = child_mod.find_port(conn.port);
          if (!p) {
            throw Error(Errc::port_arity_mismatch, conn.span,
                        "module '" + child_mod.name + "' has no port '" + conn.port + "'");
          }
          if (p->dir == PortDir::input) c.inputs.push_back({p, &*conn.actual});
          else c.outputs.push_back({p, &*conn.actual});
        }
      } else {
        if (inst.connections.size() != child_mod.ports.size()) {
          throw Error(Errc::port_arity_mismatch,
                      "positional connection count mismatch for '" + inst.instance_name + "'");
        }
        for (size_t i = 0; i < inst.connections.size(); ++i) {
          if (!inst.connections[i].actual) continue;
          const Port* p = &child_mod.ports[i];
          if (p->dir == PortDir::input) c.inputs.push_back({p, &*inst.connections[i].actual});
          else c.outputs.push_back({p, &*inst.connections[i].actual});
        }
      }
      total_signals += c.sim->total_signals;
      children.push_back(std::move(c));
    }
  }

  bool exchange_and_settle() {
    bool changed = false;
    interp.settle();
    for (auto& c : children) {
      for (const auto& [port, actual] : c.inputs) {
        std::uint64_t v = interp.eval(*actual);
        std::uint64_t before = c.sim->interp.get(port->name);
        c.sim->interp.set(port->name, v);
        if (c.sim->interp.get(port->name) != before) changed = true;
      }
      changed |= c.sim->exchange_and_settle();
      for (const auto& [port, actual] : c.outputs) {
        std::uint64_t v = c.sim->interp.get(port->name);
        changed |= interp.poke_lvalue(*actual, v);
      }
    }
    return changed;
  }

  void settle_all() {
    size_t cap = total_signals + 2;
    for (size_t i = 0; i <= cap; ++i) {
      if (!exchange_and_settle()) return;
    }
    throw Error(Errc::combinational_loop, "hierarchical settle did not converge");
  }

  void tick_stage_all() {
    interp.tick_stage();
    for (auto& c : children) c.sim->tick_stage_all();
  }
  void tick_commit_all() {
    interp.tick_commit();
    for (auto& c : children) c.sim->tick_commit_all();
  }
};

HierSim::HierSim(const std::vector<HdlModule>& modules, const std::string& top) {
  std::unordered_map<std::string, const HdlModule*> by_name;
  for (const auto& m : modules) by_name[m.name] = &m;
  auto it = by_name.find(top);
  if (it == by_name.end()) {
    throw Error(Errc::unknown_module, "unknown module '" + top + "'");
  }
  std::unordered_map<std::string, Expr::Const> no_overrides;
  impl_ = std::make_unique<Impl>(by_name, *it->second, no_overrides);
}

HierSim::~HierSim() = default;
HierSim::HierSim(HierSim&&) noexcept = default;

void HierSim::set(const std::string& name, std::uint64_t value) { impl_->interp.set(name, value); }
void HierSim::settle() { impl_->settle_all(); }
void HierSim::tick_stage() { impl_->tick_stage_all(); }
void HierSim::tick_commit() { impl_->tick_commit_all(); }
std::map<std::string, std::uint64_t> HierSim::outputs() const { return impl_->interp.outputs(); }

std::vector<std::map<std::string, std::uint64_t>> run_trace_hier(
    const std::vector<HdlModule>& modules, const std::string& top,
    const std::vector<std::map<std::string, std::uint64_t>>& inputs) {
  HierSim sim(modules, top);
  std::vector<std::map<std::string, std::uint64_t>> out;
  for (const auto& step : inputs) {
    for (const auto& [name, value] : step) sim.set(name, value);
    sim.settle();
    out.push_back(sim.outputs());
    sim.tick_stage();
    sim.tick_commit();
  }
  return out;
}

}  // namespace trojanscope
