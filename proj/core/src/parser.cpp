#include "trojanscope/parser.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace trojanscope {

namespace {

Expr make_const_expr(const Token& tok) {
  Expr e;
  Expr::Const c;
  c.sized = tok.has_width;
  c.width = tok.width;

  // Wildcard digits (x/z/?) contribute to the mask, value bits read as 0.
  // Only binary/octal/hex digit strings can carry them.
  std::string value_digits, mask_digits;
  bool has_wild = false;
  for (char ch : tok.digits) {
    if (ch == '_') continue;
    if (ch == 'x' || ch == 'X' || ch == 'z' || ch == 'Z' || ch == '?') {
      has_wild = true;
      value_digits.push_back('0');
      mask_digits.push_back(tok.radix == 16 ? 'f' : (tok.radix == 8 ? '7' : '1'));
    } else {
      value_digits.push_back(ch);
      mask_digits.push_back('0');
    }
  }
  if (has_wild && tok.radix == 10) {
    throw Error(Errc::lex_error, tok.span, "x/z digits are not valid in decimal constants");
  }
  c.value = BigUint::from_digits(value_digits, tok.radix).truncated(c.width);
  c.xmask = has_wild ? BigUint::from_digits(mask_digits, tok.radix).truncated(c.width) : BigUint();
  e.node = std::move(c);
  e.span = tok.span;
  return e;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  std::vector<HdlModule> run() {
    std::vector<HdlModule> modules;
    while (peek().kind != Tok::eof) {
      if (peek().kind != Tok::kw_module) {
        fail_unexpected("'module'");
      }
      modules.push_back(parse_module());
    }
    std::unordered_set<std::string> names;
    for (const auto& m : modules) {
      if (!names.insert(m.name).second) {
        throw Error(Errc::parse_error, m.span, "duplicate module '" + m.name + "'");
      }
    }
    return modules;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek(size_t off = 0) const {
    size_t i = pos_ + off;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool check(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (check(k)) {
      advance();
      return true;
    }
    return false;
  }
  const Token& expect(Tok k, const char* what) {
    if (!check(k)) fail_unexpected(what);
    return advance();
  }

  [[noreturn]] void fail_unexpected(const std::string& expected) const {
    const Token& t = peek();
    if (t.kind == Tok::reserved) {
      throw Error(Errc::unsupported_construct, t.span,
                  "'" + t.text + "' is out of the supported subset");
    }
    if (t.kind == Tok::system_ident) {
      throw Error(Errc::unsupported_construct, t.span,
                  "system tasks/functions (" + t.text + ") are out of subset");
    }
    std::string found = t.kind == Tok::eof ? "end of input" : "'" + t.text + "'";
    throw Error(Errc::parse_error, t.span, "expected " + expected + ", found " + found);
  }

  std::string expect_ident(const char* what) { return expect(Tok::ident, what).text; }

  // ---- modules ----

  HdlModule parse_module() {
    HdlModule mod;
    mod.span = peek().span;
    expect(Tok::kw_module, "'module'");
    mod.name = expect_ident("module name");

    if (accept(Tok::hash)) parse_header_params(mod);

    std::unordered_map<std::string, size_t> port_index;
    if (accept(Tok::lparen)) {
      if (!check(Tok::rparen)) parse_port_list(mod, port_index);
      expect(Tok::rparen, "')'");
    }
    expect(Tok::semi, "';' after module header");

    while (!check(Tok::kw_endmodule)) {
      if (check(Tok::eof)) fail_unexpected("'endmodule'");
      parse_module_item(mod, port_index);
    }
    expect(Tok::kw_endmodule, "'endmodule'");

    finish_module(mod);
    return mod;
  }

  void parse_header_params(HdlModule& mod) {
    // module m #(parameter W = 8, parameter D = W*2) (...);
    expect(Tok::lparen, "'(' after '#'");
    do {
      accept(Tok::kw_parameter);
      ParamDecl p;
      p.span = peek().span;
      p.name = expect_ident("parameter name");
      expect(Tok::assign, "'=' in parameter");
      p.value = parse_expr();
      mod.params.push_back(std::move(p));
    } while (accept(Tok::comma));
    expect(Tok::rparen, "')'");
  }

  void parse_port_list(HdlModule& mod, std::unordered_map<std::string, size_t>& port_index) {
    // Either ANSI (direction present) or a bare identifier list. In ANSI
    // style, identifiers without a direction inherit the previous one.
    PortDir cur_dir = PortDir::input;
    Range cur_range;
    NetKind cur_kind = NetKind::wire;
    bool have_dir = false;

    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::kw_input || t.kind == Tok::kw_output || t.kind == Tok::kw_inout) {
        advance();
        have_dir = true;
        cur_dir = t.kind == Tok::kw_input    ? PortDir::input
                  : t.kind == Tok::kw_output ? PortDir::output
                                             : PortDir::inout;
        cur_kind = NetKind::wire;
        if (accept(Tok::kw_wire)) cur_kind = NetKind::wire;
        else if (accept(Tok::kw_reg)) cur_kind = NetKind::reg;
        cur_range = parse_opt_range();
      }
      Port p;
      p.span = peek().span;
      p.name = expect_ident("port name");
      if (have_dir) {
        p.dir = cur_dir;
        p.range = cur_range;
        p.kind = cur_kind;
        directed_.insert(p.name);
      }
      if (port_index.contains(p.name)) {
        throw Error(Errc::parse_error, p.span, "duplicate port '" + p.name + "'");
      }
      port_index[p.name] = mod.ports.size();
      mod.ports.push_back(std::move(p));
      if (!accept(Tok::comma)) break;
    }
  }

  Range parse_opt_range() {
    Range r;
    if (accept(Tok::lbracket)) {
      r.msb = parse_expr();
      expect(Tok::colon, "':' in range");
      r.lsb = parse_expr();
      expect(Tok::rbracket, "']'");
    }
    return r;
  }

  void parse_module_item(HdlModule& mod, std::unordered_map<std::string, size_t>& port_index) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kw_input:
      case Tok::kw_output:
      case Tok::kw_inout:
        parse_direction_decl(mod, port_index);
        return;
      case Tok::kw_wire:
      case Tok::kw_reg:
        parse_net_decl(mod, port_index);
        return;
      case Tok::kw_parameter:
      case Tok::kw_localparam:
        parse_param_decl(mod);
        return;
      case Tok::kw_assign:
        parse_continuous_assign(mod);
        return;
      case Tok::kw_always:
        parse_always(mod);
        return;
      case Tok::ident:
        parse_instance(mod);
        return;
      default:
        fail_unexpected("a module item");
    }
  }

  void parse_direction_decl(HdlModule& mod, std::unordered_map<std::string, size_t>& port_index) {
    const Token& t = advance();
    PortDir dir = t.kind == Tok::kw_input    ? PortDir::input
                  : t.kind == Tok::kw_output ? PortDir::output
                                             : PortDir::inout;
    NetKind kind = NetKind::wire;
    if (accept(Tok::kw_reg)) kind = NetKind::reg;
    else accept(Tok::kw_wire);
    Range range = parse_opt_range();
    do {
      const Token& name_tok = peek();
      std::string name = expect_ident("port name");
      auto it = port_index.find(name);
      if (it == port_index.end()) {
        throw Error(Errc::parse_error, name_tok.span,
                    "'" + name + "' is not listed in the module port list");
      }
      Port& p = mod.ports[it->second];
      p.dir = dir;
      p.range = range;
      p.kind = kind;
      directed_.insert(name);
    } while (accept(Tok::comma));
    expect(Tok::semi, "';'");
  }

  void parse_net_decl(HdlModule& mod, std::unordered_map<std::string, size_t>& port_index) {
    const Token& t = advance();
    NetKind kind = t.kind == Tok::kw_reg ? NetKind::reg : NetKind::wire;
    Range range = parse_opt_range();
    do {
      NetDecl d;
      d.span = peek().span;
      d.name = expect_ident("net name");
      d.kind = kind;
      d.range = range;
      auto it = port_index.find(d.name);
      if (it != port_index.end()) {
        // `output y; reg y;` merges into the port declaration.
        mod.ports[it->second].kind = kind;
        continue;
      }
      mod.nets.push_back(std::move(d));
    } while (accept(Tok::comma));
    expect(Tok::semi, "';'");
  }

  void parse_param_decl(HdlModule& mod) {
    bool local = advance().kind == Tok::kw_localparam;
    if (check(Tok::lbracket)) {
      throw Error(Errc::unsupported_construct, peek().span,
                  "ranged parameters are out of subset");
    }
    do {
      ParamDecl p;
      p.local = local;
      p.span = peek().span;
      p.name = expect_ident("parameter name");
      expect(Tok::assign, "'='");
      p.value = parse_expr();
      mod.params.push_back(std::move(p));
    } while (accept(Tok::comma));
    expect(Tok::semi, "';'");
  }

  void parse_continuous_assign(HdlModule& mod) {
    SourceSpan span = peek().span;
    expect(Tok::kw_assign, "'assign'");
    if (check(Tok::hash)) {
      throw Error(Errc::unsupported_construct, peek().span, "assignment delays are out of subset");
    }
    do {
      ContinuousAssign ca;
      ca.lhs = parse_lvalue();
      expect(Tok::assign, "'='");
      ca.rhs = parse_expr();
      HdlItem item;
      item.node = std::move(ca);
      item.span = span;
      mod.items.push_back(std::move(item));
    } while (accept(Tok::comma));
    expect(Tok::semi, "';'");
  }

  void parse_always(HdlModule& mod) {
    SourceSpan span = peek().span;
    expect(Tok::kw_always, "'always'");
    expect(Tok::at, "'@' after 'always'");

    AlwaysBlock blk;
    if (accept(Tok::star)) {
      blk.combinational = true;
    } else {
      expect(Tok::lparen, "'('");
      if (accept(Tok::star)) {
        blk.combinational = true;
      } else {
        do {
          AlwaysBlock::EdgeEvent ev;
          ev.span = peek().span;
          if (accept(Tok::kw_posedge)) {
            ev.posedge = true;
          } else if (accept(Tok::kw_negedge)) {
            ev.posedge = false;
          } else {
            throw Error(Errc::unsupported_construct, peek().span,
                        "sensitivity lists must use posedge/negedge or (*)");
          }
          ev.signal = expect_ident("edge signal");
          blk.edges.push_back(std::move(ev));
        } while (accept(Tok::kw_or) || accept(Tok::comma));
      }
      expect(Tok::rparen, "')'");
    }

    blk.body = parse_stmt_as_body();
    HdlItem item;
    item.node = std::move(blk);
    item.span = span;
    mod.items.push_back(std::move(item));
  }

  std::vector<Stmt> parse_stmt_as_body() {
    std::vector<Stmt> body;
    append_stmt(body);
    return body;
  }

  // Nested begin/end blocks flatten into the enclosing body.
  void append_stmt(std::vector<Stmt>& body) {
    if (accept(Tok::kw_begin)) {
      while (!accept(Tok::kw_end)) {
        if (check(Tok::eof)) fail_unexpected("'end'");
        append_stmt(body);
      }
      return;
    }
    body.push_back(parse_stmt());
  }

  Stmt parse_stmt() {
    const Token& t = peek();
    Stmt s;
    s.span = t.span;
    switch (t.kind) {
      case Tok::kw_if: {
        advance();
        Stmt::If node;
        expect(Tok::lparen, "'('");
        node.cond = parse_expr();
        expect(Tok::rparen, "')'");
        node.then_body = parse_stmt_as_body();
        if (accept(Tok::kw_else)) node.else_body = parse_stmt_as_body();
        s.node = std::move(node);
        return s;
      }
      case Tok::kw_case:
      case Tok::kw_casex: {
        advance();
        Stmt::Case node;
        node.casex = t.kind == Tok::kw_casex;
        expect(Tok::lparen, "'('");
        node.selector = parse_expr();
        expect(Tok::rparen, "')'");
        while (!accept(Tok::kw_endcase)) {
          if (check(Tok::eof)) fail_unexpected("'endcase'");
          Stmt::Case::Item item;
          if (accept(Tok::kw_default)) {
            item.is_default = true;
            accept(Tok::colon);
          } else {
            do {
              item.labels.push_back(parse_expr());
            } while (accept(Tok::comma));
            expect(Tok::colon, "':' after case label");
          }
          item.body = parse_stmt_as_body();
          node.items.push_back(std::move(item));
        }
        if (node.items.empty()) {
          throw Error(Errc::parse_error, s.span, "case statement has no items");
        }
        s.node = std::move(node);
        return s;
      }
      case Tok::ident:
      case Tok::lbrace: {
        Stmt::Assign node;
        node.lhs = parse_lvalue();
        if (accept(Tok::le)) {
          node.nonblocking = true;
        } else {
          expect(Tok::assign, "'=' or '<='");
          node.nonblocking = false;
        }
        node.rhs = parse_expr();
        expect(Tok::semi, "';'");
        s.node = std::move(node);
        return s;
      }
      default:
        fail_unexpected("a statement");
    }
  }

  Expr parse_lvalue() {
    if (check(Tok::lbrace)) {
      Expr e;
      e.span = peek().span;
      advance();
      e.node = Expr::Concat{};
      do {
        e.children.push_back(parse_lvalue());
      } while (accept(Tok::comma));
      expect(Tok::rbrace, "'}'");
      return e;
    }
    const Token& name_tok = peek();
    std::string name = expect_ident("lvalue");
    Expr base;
    base.node = Expr::Ident{name};
    base.span = name_tok.span;
    if (accept(Tok::lbracket)) {
      Expr first = parse_expr();
      if (accept(Tok::colon)) {
        Expr lsb = parse_expr();
        expect(Tok::rbracket, "']'");
        Expr e;
        e.span = name_tok.span;
        e.node = Expr::PartSelect{};
        e.children.push_back(std::move(base));
        e.children.push_back(std::move(first));
        e.children.push_back(std::move(lsb));
        return e;
      }
      expect(Tok::rbracket, "']'");
      Expr e;
      e.span = name_tok.span;
      e.node = Expr::BitSelect{};
      e.children.push_back(std::move(base));
      e.children.push_back(std::move(first));
      return e;
    }
    return base;
  }

  // ---- instances ----

  void parse_instance(HdlModule& mod) {
    SourceSpan span = peek().span;
    ModuleInstance inst;
    inst.module_name = expect_ident("module name");
    if (accept(Tok::hash)) {
      expect(Tok::lparen, "'('");
      bool named = check(Tok::dot);
      do {
        ModuleInstance::ParamOverride ov;
        if (named) {
          expect(Tok::dot, "'.'");
          ov.name = expect_ident("parameter name");
          expect(Tok::lparen, "'('");
          ov.value = parse_expr();
          expect(Tok::rparen, "')'");
        } else {
          ov.value = parse_expr();
        }
        inst.param_overrides.push_back(std::move(ov));
      } while (accept(Tok::comma));
      expect(Tok::rparen, "')'");
    }
    inst.instance_name = expect_ident("instance name");
    expect(Tok::lparen, "'('");
    if (!check(Tok::rparen)) {
      inst.named_connections = check(Tok::dot);
      do {
        ModuleInstance::Connection conn;
        conn.span = peek().span;
        if (inst.named_connections) {
          expect(Tok::dot, "'.'");
          conn.port = expect_ident("port name");
          expect(Tok::lparen, "'('");
          if (!check(Tok::rparen)) conn.actual = parse_expr();
          expect(Tok::rparen, "')'");
        } else {
          conn.actual = parse_expr();
        }
        inst.connections.push_back(std::move(conn));
      } while (accept(Tok::comma));
    }
    expect(Tok::rparen, "')'");
    expect(Tok::semi, "';'");

    HdlItem item;
    item.node = std::move(inst);
    item.span = span;
    mod.items.push_back(std::move(item));
  }

  // ---- expressions ----

  Expr parse_expr() { return parse_ternary(); }

  Expr parse_ternary() {
    Expr cond = parse_binary(0);
    if (accept(Tok::question)) {
      Expr then_e = parse_ternary();
      expect(Tok::colon, "':'");
      Expr else_e = parse_ternary();
      Expr e;
      e.span = cond.span;
      e.node = Expr::Ternary{};
      e.children.push_back(std::move(cond));
      e.children.push_back(std::move(then_e));
      e.children.push_back(std::move(else_e));
      return e;
    }
    return cond;
  }

  struct BinOpInfo {
    BinaryOp op;
    int prec;
  };

  static std::optional<BinOpInfo> binop_info(Tok k) {
    switch (k) {
      case Tok::pipe_pipe: return BinOpInfo{BinaryOp::logical_or, 1};
      case Tok::amp_amp: return BinOpInfo{BinaryOp::logical_and, 2};
      case Tok::pipe: return BinOpInfo{BinaryOp::bit_or, 3};
      case Tok::caret: return BinOpInfo{BinaryOp::bit_xor, 4};
      case Tok::tilde_caret: return BinOpInfo{BinaryOp::bit_xnor, 4};
      case Tok::amp: return BinOpInfo{BinaryOp::bit_and, 5};
      case Tok::eq_eq: return BinOpInfo{BinaryOp::eq, 6};
      case Tok::bang_eq: return BinOpInfo{BinaryOp::neq, 6};
      case Tok::lt: return BinOpInfo{BinaryOp::lt, 7};
      case Tok::le: return BinOpInfo{BinaryOp::le, 7};
      case Tok::gt: return BinOpInfo{BinaryOp::gt, 7};
      case Tok::ge: return BinOpInfo{BinaryOp::ge, 7};
      case Tok::shl: return BinOpInfo{BinaryOp::shl, 8};
      case Tok::shr: return BinOpInfo{BinaryOp::shr, 8};
      case Tok::plus: return BinOpInfo{BinaryOp::add, 9};
      case Tok::minus: return BinOpInfo{BinaryOp::sub, 9};
      case Tok::star: return BinOpInfo{BinaryOp::mul, 10};
      case Tok::slash: return BinOpInfo{BinaryOp::div, 10};
      case Tok::percent: return BinOpInfo{BinaryOp::mod, 10};
      default: return std::nullopt;
    }
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    while (true) {
      auto info = binop_info(peek().kind);
      if (!info || info->prec < min_prec) return lhs;
      SourceSpan span = peek().span;
      advance();
      Expr rhs = parse_binary(info->prec + 1);
      Expr e;
      e.span = span;
      e.node = Expr::Binary{info->op};
      e.children.push_back(std::move(lhs));
      e.children.push_back(std::move(rhs));
      lhs = std::move(e);
    }
  }

  Expr parse_unary() {
    const Token& t = peek();
    UnaryOp op;
    switch (t.kind) {
      case Tok::tilde: op = UnaryOp::bit_not; break;
      case Tok::bang: op = UnaryOp::logical_not; break;
      case Tok::amp: op = UnaryOp::reduce_and; break;
      case Tok::pipe: op = UnaryOp::reduce_or; break;
      case Tok::caret: op = UnaryOp::reduce_xor; break;
      case Tok::tilde_amp: op = UnaryOp::reduce_nand; break;
      case Tok::tilde_pipe: op = UnaryOp::reduce_nor; break;
      case Tok::tilde_caret: op = UnaryOp::reduce_xnor; break;
      case Tok::plus: op = UnaryOp::plus; break;
      case Tok::minus: op = UnaryOp::minus; break;
      default: return parse_primary();
    }
    advance();
    Expr e;
    e.span = t.span;
    e.node = Expr::Unary{op};
    e.children.push_back(parse_unary());
    return e;
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        advance();
        return make_const_expr(t);
      }
      case Tok::ident: {
        advance();
        Expr base;
        base.node = Expr::Ident{t.text};
        base.span = t.span;
        if (accept(Tok::lbracket)) {
          Expr first = parse_expr();
          if (accept(Tok::colon)) {
            Expr lsb = parse_expr();
            expect(Tok::rbracket, "']'");
            Expr e;
            e.span = t.span;
            e.node = Expr::PartSelect{};
            e.children.push_back(std::move(base));
            e.children.push_back(std::move(first));
            e.children.push_back(std::move(lsb));
            return e;
          }
          expect(Tok::rbracket, "']'");
          Expr e;
          e.span = t.span;
          e.node = Expr::BitSelect{};
          e.children.push_back(std::move(base));
          e.children.push_back(std::move(first));
          return e;
        }
        return base;
      }
      case Tok::lparen: {
        advance();
        Expr e = parse_expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::lbrace: {
        advance();
        Expr first = parse_expr();
        if (check(Tok::lbrace)) {
          // {count{item, ...}}
          advance();
          Expr inner;
          inner.span = peek().span;
          std::vector<Expr> items;
          do {
            items.push_back(parse_expr());
          } while (accept(Tok::comma));
          expect(Tok::rbrace, "'}'");
          expect(Tok::rbrace, "'}'");
          if (items.size() == 1) {
            inner = std::move(items[0]);
          } else {
            inner.node = Expr::Concat{};
            inner.children = std::move(items);
          }
          Expr e;
          e.span = t.span;
          e.node = Expr::Repeat{};
          e.children.push_back(std::move(first));
          e.children.push_back(std::move(inner));
          return e;
        }
        Expr e;
        e.span = t.span;
        e.node = Expr::Concat{};
        e.children.push_back(std::move(first));
        while (accept(Tok::comma)) e.children.push_back(parse_expr());
        expect(Tok::rbrace, "'}'");
        return e;
      }
      case Tok::string_lit:
        throw Error(Errc::unsupported_construct, t.span, "string literals are out of subset");
      default:
        fail_unexpected("an expression");
    }
  }

  // ---- post-parse checks ----

  void finish_module(HdlModule& mod) {
    // All ports need a direction: in ANSI style it came with the header, in
    // non-ANSI style from a body declaration.
    for (const auto& p : mod.ports) {
      if (!directed_.contains(p.name)) {
        throw Error(Errc::parse_error, p.span,
                    "port '" + p.name + "' has no direction declaration");
      }
    }

    std::unordered_set<std::string> declared;
    for (const auto& p : mod.ports) declared.insert(p.name);
    for (const auto& n : mod.nets) {
      if (!declared.insert(n.name).second) {
        throw Error(Errc::parse_error, n.span, "duplicate declaration of '" + n.name + "'");
      }
    }
    for (const auto& p : mod.params) {
      if (!declared.insert(p.name).second) {
        throw Error(Errc::parse_error, p.span, "duplicate declaration of '" + p.name + "'");
      }
    }

    for (const auto& p : mod.params) check_refs(p.value, declared);
    for (const auto& p : mod.ports) check_range(p.range, declared);
    for (const auto& n : mod.nets) check_range(n.range, declared);

    for (const auto& item : mod.items) {
      if (item.is<ContinuousAssign>()) {
        const auto& ca = item.as<ContinuousAssign>();
        check_refs(ca.lhs, declared);
        check_refs(ca.rhs, declared);
      } else if (item.is<AlwaysBlock>()) {
        const auto& blk = item.as<AlwaysBlock>();
        for (const auto& ev : blk.edges) {
          if (!declared.contains(ev.signal)) {
            throw Error(Errc::parse_error, ev.span, "undeclared signal '" + ev.signal + "'");
          }
        }
        for (const auto& s : blk.body) check_stmt_refs(s, declared);
      } else {
        const auto& inst = item.as<ModuleInstance>();
        for (const auto& ov : inst.param_overrides) check_refs(ov.value, declared);
        for (const auto& conn : inst.connections) {
          if (conn.actual) check_refs(*conn.actual, declared);
        }
      }
    }

    directed_.clear();

  }

  void check_range(const Range& r, const std::unordered_set<std::string>& declared) {
    if (r.msb) check_refs(*r.msb, declared);
    if (r.lsb) check_refs(*r.lsb, declared);
  }

  void check_stmt_refs(const Stmt& s, const std::unordered_set<std::string>& declared) {
    if (s.is<Stmt::Assign>()) {
      const auto& a = s.as<Stmt::Assign>();
      check_refs(a.lhs, declared);
      check_refs(a.rhs, declared);
    } else if (s.is<Stmt::If>()) {
      const auto& i = s.as<Stmt::If>();
      check_refs(i.cond, declared);
      for (const auto& b : i.then_body) check_stmt_refs(b, declared);
      for (const auto& b : i.else_body) check_stmt_refs(b, declared);
    } else {
      const auto& c = s.as<Stmt::Case>();
      check_refs(c.selector, declared);
      for (const auto& item : c.items) {
        for (const auto& l : item.labels) check_refs(l, declared);
        for (const auto& b : item.body) check_stmt_refs(b, declared);
      }
    }
  }

  void check_refs(const Expr& e, const std::unordered_set<std::string>& declared) {
    if (e.is<Expr::Ident>()) {
      if (!declared.contains(e.as<Expr::Ident>().name)) {
        throw Error(Errc::parse_error, e.span,
                    "undeclared identifier '" + e.as<Expr::Ident>().name + "'");
      }
    }
    for (const auto& c : e.children) check_refs(c, declared);
  }

  std::unordered_set<std::string> directed_;

};

}  // namespace

std::vector<HdlModule> parse(const std::vector<Token>& tokens) {
  return Parser(tokens).run();
}

std::vector<HdlModule> parse_source(std::string_view source, const std::string& file) {
  return parse(tokenize(source, file));
}

std::vector<HdlModule> parse_files(const std::vector<std::string>& paths) {
  std::vector<HdlModule> all;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto mods = parse_source(ss.str(), path);
    for (auto& m : mods) all.push_back(std::move(m));
  }
  // Cross-file duplicate check.
  std::unordered_set<std::string> names;
  for (const auto& m : all) {
    if (!names.insert(m.name).second) {
      throw Error(Errc::parse_error, m.span, "duplicate module '" + m.name + "'");
    }
  }
  return all;
}

}  // namespace trojanscope
