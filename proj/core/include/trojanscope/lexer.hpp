#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trojanscope/diagnostics.hpp"

namespace trojanscope {

enum class Tok {
  eof,
  ident,
  system_ident,  // $display etc., always out of subset
  number,
  string_lit,
  reserved,  // recognized Verilog keyword outside the subset

  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  semi,
  comma,
  dot,
  hash,
  at,
  question,
  colon,
  assign,  // =

  amp,
  amp_amp,
  pipe,
  pipe_pipe,
  caret,
  tilde_caret,  // ~^ or ^~
  tilde,
  tilde_amp,
  tilde_pipe,
  bang,
  eq_eq,
  bang_eq,
  lt,
  le,  // <= : relational in expressions, nonblocking in statements
  gt,
  ge,
  shl,
  shr,
  plus,
  minus,
  star,
  slash,
  percent,

  kw_module,
  kw_endmodule,
  kw_input,
  kw_output,
  kw_inout,
  kw_wire,
  kw_reg,
  kw_parameter,
  kw_localparam,
  kw_assign,
  kw_always,
  kw_begin,
  kw_end,
  kw_if,
  kw_else,
  kw_case,
  kw_casex,
  kw_endcase,
  kw_default,
  kw_posedge,
  kw_negedge,
  kw_or,
};

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  SourceSpan span;

  // number payload
  bool has_width = false;
  unsigned width = 0;
  unsigned radix = 10;      // 2, 8, 10 or 16
  bool based = false;       // written with a base letter ('h, 'b, ...)
  std::string digits;       // raw digits, may contain x/z/? and _
};

/// Lex one source file into a token stream. Comments and whitespace are
/// discarded; every token carries its span; `\`-escaped identifiers are
/// preserved verbatim (minus the backslash and the trailing separator).
std::vector<Token> tokenize(std::string_view source, const std::string& file);

}  // namespace trojanscope
