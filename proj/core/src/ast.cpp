#include "trojanscope/ast.hpp"

namespace trojanscope {

const char* unary_op_symbol(UnaryOp op) {
  switch (op) {
    case UnaryOp::bit_not: return "~";
    case UnaryOp::logical_not: return "!";
    case UnaryOp::reduce_and: return "&";
    case UnaryOp::reduce_or: return "|";
    case UnaryOp::reduce_xor: return "^";
    case UnaryOp::reduce_nand: return "~&";
    case UnaryOp::reduce_nor: return "~|";
    case UnaryOp::reduce_xnor: return "~^";
    case UnaryOp::plus: return "+";
    case UnaryOp::minus: return "-";
  }
  return "?";
}

const char* binary_op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::bit_and: return "&";
    case BinaryOp::bit_or: return "|";
    case BinaryOp::bit_xor: return "^";
    case BinaryOp::bit_xnor: return "~^";
    case BinaryOp::logical_and: return "&&";
    case BinaryOp::logical_or: return "||";
    case BinaryOp::eq: return "==";
    case BinaryOp::neq: return "!=";
    case BinaryOp::lt: return "<";
    case BinaryOp::le: return "<=";
    case BinaryOp::gt: return ">";
    case BinaryOp::ge: return ">=";
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::mod: return "%";
    case BinaryOp::shl: return "<<";
    case BinaryOp::shr: return ">>";
  }
  return "?";
}

const Port* HdlModule::find_port(const std::string& n) const {
  for (const auto& p : ports) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

const NetDecl* HdlModule::find_net(const std::string& n) const {
  for (const auto& d : nets) {
    if (d.name == n) return &d;
  }
  return nullptr;
}

const ParamDecl* HdlModule::find_param(const std::string& n) const {
  for (const auto& p : params) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (a.children.size() != b.children.size()) return false;
  if (a.is<Expr::Ident>() && a.as<Expr::Ident>().name != b.as<Expr::Ident>().name) return false;
  if (a.is<Expr::Const>()) {
    const auto& ca = a.as<Expr::Const>();
    const auto& cb = b.as<Expr::Const>();
    if (ca.value != cb.value || ca.width != cb.width || ca.sized != cb.sized ||
        ca.xmask != cb.xmask) {
      return false;
    }
  }
  if (a.is<Expr::Unary>() && a.as<Expr::Unary>().op != b.as<Expr::Unary>().op) return false;
  if (a.is<Expr::Binary>() && a.as<Expr::Binary>().op != b.as<Expr::Binary>().op) return false;
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!expr_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {

bool opt_expr_equal(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || expr_equal(*a, *b);
}

bool range_equal(const Range& a, const Range& b) {
  return opt_expr_equal(a.msb, b.msb) && opt_expr_equal(a.lsb, b.lsb);
}

bool stmt_equal(const Stmt& a, const Stmt& b);

bool body_equal(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!stmt_equal(a[i], b[i])) return false;
  }
  return true;
}

bool stmt_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (a.is<Stmt::Assign>()) {
    const auto& x = a.as<Stmt::Assign>();
    const auto& y = b.as<Stmt::Assign>();
    return x.nonblocking == y.nonblocking && expr_equal(x.lhs, y.lhs) && expr_equal(x.rhs, y.rhs);
  }
  if (a.is<Stmt::If>()) {
    const auto& x = a.as<Stmt::If>();
    const auto& y = b.as<Stmt::If>();
    return expr_equal(x.cond, y.cond) && body_equal(x.then_body, y.then_body) &&
           body_equal(x.else_body, y.else_body);
  }
  const auto& x = a.as<Stmt::Case>();
  const auto& y = b.as<Stmt::Case>();
  if (x.casex != y.casex || !expr_equal(x.selector, y.selector) || x.items.size() != y.items.size())
    return false;
  for (size_t i = 0; i < x.items.size(); ++i) {
    const auto& ia = x.items[i];
    const auto& ib = y.items[i];
    if (ia.is_default != ib.is_default || ia.labels.size() != ib.labels.size()) return false;
    for (size_t j = 0; j < ia.labels.size(); ++j) {
      if (!expr_equal(ia.labels[j], ib.labels[j])) return false;
    }
    if (!body_equal(ia.body, ib.body)) return false;
  }
  return true;
}

bool item_equal(const HdlItem& a, const HdlItem& b) {
  if (a.node.index() != b.node.index()) return false;
  if (a.is<ContinuousAssign>()) {
    const auto& x = a.as<ContinuousAssign>();
    const auto& y = b.as<ContinuousAssign>();
    return expr_equal(x.lhs, y.lhs) && expr_equal(x.rhs, y.rhs);
  }
  if (a.is<AlwaysBlock>()) {
    const auto& x = a.as<AlwaysBlock>();
    const auto& y = b.as<AlwaysBlock>();
    if (x.combinational != y.combinational || x.edges.size() != y.edges.size()) return false;
    for (size_t i = 0; i < x.edges.size(); ++i) {
      if (x.edges[i].posedge != y.edges[i].posedge || x.edges[i].signal != y.edges[i].signal)
        return false;
    }
    return body_equal(x.body, y.body);
  }
  const auto& x = a.as<ModuleInstance>();
  const auto& y = b.as<ModuleInstance>();
  if (x.module_name != y.module_name || x.instance_name != y.instance_name ||
      x.named_connections != y.named_connections ||
      x.param_overrides.size() != y.param_overrides.size() ||
      x.connections.size() != y.connections.size()) {
    return false;
  }
  for (size_t i = 0; i < x.param_overrides.size(); ++i) {
    if (x.param_overrides[i].name != y.param_overrides[i].name ||
        !expr_equal(x.param_overrides[i].value, y.param_overrides[i].value)) {
      return false;
    }
  }
  for (size_t i = 0; i < x.connections.size(); ++i) {
    if (x.connections[i].port != y.connections[i].port ||
        !opt_expr_equal(x.connections[i].actual, y.connections[i].actual)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool module_equal(const HdlModule& a, const HdlModule& b) {
  if (a.name != b.name || a.ports.size() != b.ports.size() || a.nets.size() != b.nets.size() ||
      a.params.size() != b.params.size() || a.items.size() != b.items.size()) {
    return false;
  }
  for (size_t i = 0; i < a.ports.size(); ++i) {
    const auto& x = a.ports[i];
    const auto& y = b.ports[i];
    if (x.name != y.name || x.dir != y.dir || x.kind != y.kind || !range_equal(x.range, y.range))
      return false;
  }
  for (size_t i = 0; i < a.nets.size(); ++i) {
    const auto& x = a.nets[i];
    const auto& y = b.nets[i];
    if (x.name != y.name || x.kind != y.kind || !range_equal(x.range, y.range)) return false;
  }
  for (size_t i = 0; i < a.params.size(); ++i) {
    const auto& x = a.params[i];
    const auto& y = b.params[i];
    if (x.name != y.name || x.local != y.local || !expr_equal(x.value, y.value)) return false;
  }
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (!item_equal(a.items[i], b.items[i])) return false;
  }
  return true;
}

bool modules_equal(const std::vector<HdlModule>& a, const std::vector<HdlModule>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!module_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace trojanscope
