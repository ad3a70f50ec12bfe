#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trojanscope/bigint.hpp"
#include "trojanscope/diagnostics.hpp"

namespace trojanscope {

enum class PortDir { input, output, inout };
enum class NetKind { wire, reg };

enum class UnaryOp {
  bit_not,      // ~a
  logical_not,  // !a
  reduce_and,   // &a
  reduce_or,    // |a
  reduce_xor,   // ^a
  reduce_nand,  // ~&a
  reduce_nor,   // ~|a
  reduce_xnor,  // ~^a
  plus,         // +a
  minus,        // -a
};

enum class BinaryOp {
  bit_and,      // &
  bit_or,       // |
  bit_xor,      // ^
  bit_xnor,     // ~^ or ^~
  logical_and,  // &&
  logical_or,   // ||
  eq,           // ==
  neq,          // !=
  lt,           // <
  le,           // <=
  gt,           // >
  ge,           // >=
  add,          // +
  sub,          // -
  mul,          // *
  div,          // /
  mod,          // %
  shl,          // <<
  shr,          // >>
};

const char* unary_op_symbol(UnaryOp op);
const char* binary_op_symbol(BinaryOp op);

// Variant payloads live at namespace scope: nesting them next to the
// variant member trips GCC's premature trait caching (PR 96645) because of
// their default member initializers.
struct ExprIdent {
  std::string name;
};
/// `xmask` marks wildcard bit positions (x/z/? digits); nonzero masks are
/// legal only in casex labels.
struct ExprConst {
  BigUint value;
  unsigned width = 32;
  bool sized = false;
  BigUint xmask;
};
struct ExprUnary {
  UnaryOp op;
};
struct ExprBinary {
  BinaryOp op;
};
struct ExprTernary {};
struct ExprConcat {};
struct ExprRepeat {};
struct ExprBitSelect {};
struct ExprPartSelect {};

/// Expression tree. Children live in `children`; the variant carries the
/// node-specific payload. Child layout per node kind:
///   Unary       [operand]
///   Binary      [lhs, rhs]
///   Ternary     [cond, then, else]
///   Concat      [item...]
///   Repeat      [count, item]
///   BitSelect   [base, index]
///   PartSelect  [base, msb, lsb]
struct Expr {
  using Ident = ExprIdent;
  using Const = ExprConst;
  using Unary = ExprUnary;
  using Binary = ExprBinary;
  using Ternary = ExprTernary;
  using Concat = ExprConcat;
  using Repeat = ExprRepeat;
  using BitSelect = ExprBitSelect;
  using PartSelect = ExprPartSelect;

  using Node =
      std::variant<Ident, Const, Unary, Binary, Ternary, Concat, Repeat, BitSelect, PartSelect>;

  Node node;
  std::vector<Expr> children;
  SourceSpan span;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
};

struct Stmt;

struct StmtAssign {
  bool nonblocking = false;
  Expr lhs;
  Expr rhs;
};
struct StmtIf {
  Expr cond;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;
};
struct StmtCaseItem {
  bool is_default = false;
  std::vector<Expr> labels;
  std::vector<Stmt> body;
};
struct StmtCase {
  bool casex = false;
  Expr selector;
  using Item = StmtCaseItem;
  std::vector<StmtCaseItem> items;
};

struct Stmt {
  using Assign = StmtAssign;
  using If = StmtIf;
  using Case = StmtCase;

  std::variant<Assign, If, Case> node;
  SourceSpan span;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
};

/// [msb:lsb]; both bounds absent means a 1-bit scalar.
struct Range {
  std::optional<Expr> msb;
  std::optional<Expr> lsb;

  bool is_scalar() const { return !msb.has_value(); }
};

struct ContinuousAssign {
  Expr lhs;
  Expr rhs;
};

struct AlwaysBlock {
  struct EdgeEvent {
    bool posedge = true;
    std::string signal;
    SourceSpan span;
  };
  bool combinational = false;      // always @(*)
  std::vector<EdgeEvent> edges;    // empty when combinational
  std::vector<Stmt> body;
};

struct ModuleInstance {
  struct ParamOverride {
    std::string name;  // empty for positional
    Expr value;
  };
  struct Connection {
    std::string port;  // empty for positional
    std::optional<Expr> actual;
    SourceSpan span;
  };
  std::string module_name;
  std::string instance_name;
  std::vector<ParamOverride> param_overrides;
  std::vector<Connection> connections;
  bool named_connections = false;
};

struct HdlItem {
  std::variant<ContinuousAssign, AlwaysBlock, ModuleInstance> node;
  SourceSpan span;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
};

struct Port {
  std::string name;
  PortDir dir = PortDir::input;
  Range range;
  NetKind kind = NetKind::wire;
  SourceSpan span;
};

struct NetDecl {
  std::string name;
  NetKind kind = NetKind::wire;
  Range range;
  SourceSpan span;
};

struct ParamDecl {
  std::string name;
  Expr value;
  bool local = false;
  SourceSpan span;
};

struct HdlModule {
  std::string name;
  std::vector<Port> ports;
  std::vector<NetDecl> nets;
  std::vector<ParamDecl> params;
  std::vector<HdlItem> items;
  SourceSpan span;

  const Port* find_port(const std::string& n) const;
  const NetDecl* find_net(const std::string& n) const;
  const ParamDecl* find_param(const std::string& n) const;
};

/// Span-insensitive structural equality, used by round-trip tests and the
/// idempotence checks.
bool expr_equal(const Expr& a, const Expr& b);
bool module_equal(const HdlModule& a, const HdlModule& b);
bool modules_equal(const std::vector<HdlModule>& a, const std::vector<HdlModule>& b);

}  // namespace trojanscope
