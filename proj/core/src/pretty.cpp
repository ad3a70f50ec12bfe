#include "trojanscope/pretty.hpp"

#include <cctype>
#include <sstream>

namespace trojanscope {

namespace {

bool plain_ident(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$')) return false;
  }
  return true;
}

// Hierarchical names contain '.', which requires the escaped-identifier form.
std::string ident(const std::string& name) {
  if (plain_ident(name)) return name;
  return "\\" + name + " ";
}

int binary_prec(BinaryOp op) {
  switch (op) {
    case BinaryOp::logical_or: return 1;
    case BinaryOp::logical_and: return 2;
    case BinaryOp::bit_or: return 3;
    case BinaryOp::bit_xor:
    case BinaryOp::bit_xnor: return 4;
    case BinaryOp::bit_and: return 5;
    case BinaryOp::eq:
    case BinaryOp::neq: return 6;
    case BinaryOp::lt:
    case BinaryOp::le:
    case BinaryOp::gt:
    case BinaryOp::ge: return 7;
    case BinaryOp::shl:
    case BinaryOp::shr: return 8;
    case BinaryOp::add:
    case BinaryOp::sub: return 9;
    case BinaryOp::mul:
    case BinaryOp::div:
    case BinaryOp::mod: return 10;
  }
  return 0;
}

constexpr int kTernaryPrec = 0;
constexpr int kUnaryPrec = 11;

void print_expr_prec(const Expr& e, int parent_prec, std::ostream& os) {
  if (e.is<Expr::Ident>()) {
    os << ident(e.as<Expr::Ident>().name);
  } else if (e.is<Expr::Const>()) {
    os << render_const(e.as<Expr::Const>());
  } else if (e.is<Expr::Unary>()) {
    bool parens = kUnaryPrec < parent_prec;
    if (parens) os << '(';
    os << unary_op_symbol(e.as<Expr::Unary>().op);
    // Juxtaposed unary operators (e.g. `- -a`) and reductions need parens
    // around non-primary operands to re-lex unambiguously.
    print_expr_prec(e.children[0], kUnaryPrec + 1, os);
    if (parens) os << ')';
  } else if (e.is<Expr::Binary>()) {
    int prec = binary_prec(e.as<Expr::Binary>().op);
    bool parens = prec < parent_prec;
    if (parens) os << '(';
    print_expr_prec(e.children[0], prec, os);
    os << ' ' << binary_op_symbol(e.as<Expr::Binary>().op) << ' ';
    print_expr_prec(e.children[1], prec + 1, os);
    if (parens) os << ')';
  } else if (e.is<Expr::Ternary>()) {
    bool parens = kTernaryPrec < parent_prec;
    if (parens) os << '(';
    print_expr_prec(e.children[0], kTernaryPrec + 1, os);
    os << " ? ";
    print_expr_prec(e.children[1], kTernaryPrec, os);
    os << " : ";
    print_expr_prec(e.children[2], kTernaryPrec, os);
    if (parens) os << ')';
  } else if (e.is<Expr::Concat>()) {
    os << '{';
    for (size_t i = 0; i < e.children.size(); ++i) {
      if (i) os << ", ";
      print_expr_prec(e.children[i], 0, os);
    }
    os << '}';
  } else if (e.is<Expr::Repeat>()) {
    os << '{';
    print_expr_prec(e.children[0], kUnaryPrec + 1, os);
    os << '{';
    print_expr_prec(e.children[1], 0, os);
    os << "}}";
  } else if (e.is<Expr::BitSelect>()) {
    print_expr_prec(e.children[0], kUnaryPrec + 1, os);
    os << '[';
    print_expr_prec(e.children[1], 0, os);
    os << ']';
  } else {
    print_expr_prec(e.children[0], kUnaryPrec + 1, os);
    os << '[';
    print_expr_prec(e.children[1], 0, os);
    os << ':';
    print_expr_prec(e.children[2], 0, os);
    os << ']';
  }
}

std::string range_str(const Range& r) {
  if (r.is_scalar()) return "";
  return "[" + print_expr(*r.msb) + ":" + print_expr(*r.lsb) + "] ";
}

const char* dir_str(PortDir d) {
  switch (d) {
    case PortDir::input: return "input";
    case PortDir::output: return "output";
    case PortDir::inout: return "inout";
  }
  return "?";
}

void print_stmt(const Stmt& s, int indent, std::ostream& os);

void print_body(const std::vector<Stmt>& body, int indent, std::ostream& os) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  os << "begin\n";
  for (const auto& s : body) print_stmt(s, indent + 1, os);
  os << pad << "end";
}

void print_stmt(const Stmt& s, int indent, std::ostream& os) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (s.is<Stmt::Assign>()) {
    const auto& a = s.as<Stmt::Assign>();
    os << pad << print_expr(a.lhs) << (a.nonblocking ? " <= " : " = ") << print_expr(a.rhs)
       << ";\n";
  } else if (s.is<Stmt::If>()) {
    const auto& i = s.as<Stmt::If>();
    os << pad << "if (" << print_expr(i.cond) << ") ";
    print_body(i.then_body, indent, os);
    if (!i.else_body.empty()) {
      os << " else ";
      print_body(i.else_body, indent, os);
    }
    os << "\n";
  } else {
    const auto& c = s.as<Stmt::Case>();
    os << pad << (c.casex ? "casex (" : "case (") << print_expr(c.selector) << ")\n";
    for (const auto& item : c.items) {
      os << pad << "  ";
      if (item.is_default) {
        os << "default: ";
      } else {
        for (size_t i = 0; i < item.labels.size(); ++i) {
          if (i) os << ", ";
          os << print_expr(item.labels[i]);
        }
        os << ": ";
      }
      print_body(item.body, indent + 1, os);
      os << "\n";
    }
    os << pad << "endcase\n";
  }
}

}  // namespace

std::string render_const(const Expr::Const& c) {
  if (!c.xmask.is_zero()) {
    std::string bits = c.value.to_binary(c.width);
    for (unsigned i = 0; i < c.width; ++i) {
      if (c.xmask.bit(i)) bits[c.width - 1 - i] = 'x';
    }
    return std::to_string(c.width) + "'b" + bits;
  }
  if (!c.sized) return c.value.to_decimal();
  return std::to_string(c.width) + "'h" + c.value.to_hex();
}

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print_expr_prec(e, 0, os);
  return os.str();
}

std::string print_module(const HdlModule& mod) {
  std::ostringstream os;
  os << "module " << ident(mod.name) << "(";
  for (size_t i = 0; i < mod.ports.size(); ++i) {
    if (i) os << ", ";
    os << ident(mod.ports[i].name);
  }
  os << ");\n";
  for (const auto& p : mod.params) {
    os << "  " << (p.local ? "localparam " : "parameter ") << ident(p.name) << " = "
       << print_expr(p.value) << ";\n";
  }
  for (const auto& p : mod.ports) {
    os << "  " << dir_str(p.dir) << " " << (p.kind == NetKind::reg ? "reg " : "")
       << range_str(p.range) << ident(p.name) << ";\n";
  }
  for (const auto& n : mod.nets) {
    os << "  " << (n.kind == NetKind::reg ? "reg " : "wire ") << range_str(n.range)
       << ident(n.name) << ";\n";
  }
  for (const auto& item : mod.items) {
    if (item.is<ContinuousAssign>()) {
      const auto& ca = item.as<ContinuousAssign>();
      os << "  assign " << print_expr(ca.lhs) << " = " << print_expr(ca.rhs) << ";\n";
    } else if (item.is<AlwaysBlock>()) {
      const auto& blk = item.as<AlwaysBlock>();
      os << "  always @(";
      if (blk.combinational) {
        os << "*";
      } else {
        for (size_t i = 0; i < blk.edges.size(); ++i) {
          if (i) os << " or ";
          os << (blk.edges[i].posedge ? "posedge " : "negedge ") << ident(blk.edges[i].signal);
        }
      }
      os << ") ";
      print_body(blk.body, 1, os);
      os << "\n";
    } else {
      const auto& inst = item.as<ModuleInstance>();
      os << "  " << ident(inst.module_name);
      if (!inst.param_overrides.empty()) {
        os << " #(";
        for (size_t i = 0; i < inst.param_overrides.size(); ++i) {
          if (i) os << ", ";
          const auto& ov = inst.param_overrides[i];
          if (!ov.name.empty()) {
            os << "." << ident(ov.name) << "(" << print_expr(ov.value) << ")";
          } else {
            os << print_expr(ov.value);
          }
        }
        os << ")";
      }
      os << " " << ident(inst.instance_name) << "(";
      for (size_t i = 0; i < inst.connections.size(); ++i) {
        if (i) os << ", ";
        const auto& conn = inst.connections[i];
        if (!conn.port.empty()) {
          os << "." << ident(conn.port) << "(";
          if (conn.actual) os << print_expr(*conn.actual);
          os << ")";
        } else if (conn.actual) {
          os << print_expr(*conn.actual);
        }
      }
      os << ");\n";
    }
  }
  os << "endmodule\n";
  return os.str();
}

std::string print_modules(const std::vector<HdlModule>& mods) {
  std::string out;
  for (size_t i = 0; i < mods.size(); ++i) {
    if (i) out += "\n";
    out += print_module(mods[i]);
  }
  return out;
}

}  // namespace trojanscope
