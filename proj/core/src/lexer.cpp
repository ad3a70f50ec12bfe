#include "trojanscope/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace trojanscope {

namespace {

const std::unordered_map<std::string_view, Tok>& keyword_table() {
  static const std::unordered_map<std::string_view, Tok> table = {
      {"module", Tok::kw_module},     {"endmodule", Tok::kw_endmodule},
      {"input", Tok::kw_input},       {"output", Tok::kw_output},
      {"inout", Tok::kw_inout},       {"wire", Tok::kw_wire},
      {"reg", Tok::kw_reg},           {"parameter", Tok::kw_parameter},
      {"localparam", Tok::kw_localparam}, {"assign", Tok::kw_assign},
      {"always", Tok::kw_always},     {"begin", Tok::kw_begin},
      {"end", Tok::kw_end},           {"if", Tok::kw_if},
      {"else", Tok::kw_else},         {"case", Tok::kw_case},
      {"casex", Tok::kw_casex},       {"endcase", Tok::kw_endcase},
      {"default", Tok::kw_default},   {"posedge", Tok::kw_posedge},
      {"negedge", Tok::kw_negedge},   {"or", Tok::kw_or},
  };
  return table;
}

// Reserved words we recognize but do not support. Lexed as Tok::reserved so
// the parser can report UnsupportedConstruct with the construct's name
// instead of a generic parse error.
bool is_reserved(std::string_view s) {
  static const std::unordered_map<std::string_view, int> table = {
      {"initial", 0},   {"generate", 0}, {"endgenerate", 0}, {"genvar", 0},
      {"function", 0},  {"endfunction", 0}, {"task", 0},     {"endtask", 0},
      {"for", 0},       {"while", 0},    {"repeat", 0},      {"forever", 0},
      {"fork", 0},      {"join", 0},     {"casez", 0},       {"defparam", 0},
      {"specify", 0},   {"endspecify", 0}, {"primitive", 0}, {"endprimitive", 0},
      {"integer", 0},   {"real", 0},     {"realtime", 0},    {"time", 0},
      {"event", 0},     {"wait", 0},     {"deassign", 0},    {"force", 0},
      {"release", 0},   {"tri", 0},      {"tri0", 0},        {"tri1", 0},
      {"triand", 0},    {"trior", 0},    {"trireg", 0},      {"supply0", 0},
      {"supply1", 0},   {"signed", 0},   {"unsigned", 0},    {"automatic", 0},
      {"and", 0},       {"nand", 0},     {"nor", 0},         {"xor", 0},
      {"xnor", 0},      {"not", 0},      {"buf", 0},         {"bufif0", 0},
      {"bufif1", 0},    {"notif0", 0},   {"notif1", 0},      {"pullup", 0},
      {"pulldown", 0},  {"scalared", 0}, {"vectored", 0},    {"small", 0},
      {"medium", 0},    {"large", 0},    {"wand", 0},        {"wor", 0},
      {"disable", 0},   {"edge", 0},     {"ifnone", 0},      {"macromodule", 0},
      {"table", 0},     {"endtable", 0}, {"highz0", 0},      {"highz1", 0},
      {"strong0", 0},   {"strong1", 0},  {"weak0", 0},       {"weak1", 0},
      {"pull0", 0},     {"pull1", 0},    {"rtran", 0},       {"tran", 0},
      {"cmos", 0},      {"nmos", 0},     {"pmos", 0},        {"rcmos", 0},
      {"rnmos", 0},     {"rpmos", 0},    {"tranif0", 0},     {"tranif1", 0},
      {"rtranif0", 0},  {"rtranif1", 0},
  };
  return table.contains(s);
}

struct Cursor {
  std::string_view src;
  size_t pos = 0;
  int line = 1;
  int col = 1;
  const std::string& file;

  explicit Cursor(std::string_view s, const std::string& f) : src(s), file(f) {}

  bool done() const { return pos >= src.size(); }
  char peek(size_t off = 0) const { return pos + off < src.size() ? src[pos + off] : '\0'; }
  SourceSpan span() const { return SourceSpan{file, line, col}; }

  char advance() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool digit_char(char c) { return c >= '0' && c <= '9'; }
bool based_digit_char(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) || c == '_' || c == 'x' || c == 'X' ||
         c == 'z' || c == 'Z' || c == '?';
}

void lex_number(Cursor& cur, std::vector<Token>& out) {
  Token tok;
  tok.kind = Tok::number;
  tok.span = cur.span();

  std::string lead;
  while (digit_char(cur.peek()) || cur.peek() == '_') lead.push_back(cur.advance());

  if (cur.peek() != '\'') {
    // plain unsized decimal
    tok.has_width = false;
    tok.width = 32;
    tok.radix = 10;
    tok.based = false;
    tok.digits = lead;
    tok.text = lead;
    out.push_back(std::move(tok));
    return;
  }

  cur.advance();  // '
  if (cur.peek() == 's' || cur.peek() == 'S') {
    throw Error(Errc::unsupported_construct, cur.span(), "signed constants are out of subset");
  }
  char base = cur.peek();
  unsigned radix = 0;
  switch (base) {
    case 'b': case 'B': radix = 2; break;
    case 'o': case 'O': radix = 8; break;
    case 'd': case 'D': radix = 10; break;
    case 'h': case 'H': radix = 16; break;
    default:
      throw Error(Errc::lex_error, cur.span(),
                  std::string("invalid base character '") + base + "' in constant");
  }
  cur.advance();

  std::string digits;
  while (based_digit_char(cur.peek())) digits.push_back(cur.advance());
  if (digits.empty() || digits.find_first_not_of('_') == std::string::npos) {
    throw Error(Errc::lex_error, cur.span(), "constant has no digits after base");
  }

  tok.based = true;
  tok.radix = radix;
  tok.digits = digits;
  if (!lead.empty()) {
    std::string width_digits;
    for (char c : lead) {
      if (c != '_') width_digits.push_back(c);
    }
    tok.has_width = true;
    tok.width = static_cast<unsigned>(std::stoul(width_digits));
    if (tok.width == 0 || tok.width > 4096) {
      throw Error(Errc::lex_error, tok.span, "constant width out of range: " + width_digits);
    }
  } else {
    tok.has_width = false;
    tok.width = 32;
  }
  tok.text = lead + "'" + base + digits;
  out.push_back(std::move(tok));
}

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
  Cursor cur(source, file);
  std::vector<Token> out;

  auto push = [&](Tok kind, SourceSpan span, std::string text) {
    Token t;
    t.kind = kind;
    t.span = std::move(span);
    t.text = std::move(text);
    out.push_back(std::move(t));
  };

  while (!cur.done()) {
    char c = cur.peek();
    SourceSpan span = cur.span();

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
      cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '/') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '*') {
      cur.advance();
      cur.advance();
      bool closed = false;
      while (!cur.done()) {
        if (cur.peek() == '*' && cur.peek(1) == '/') {
          cur.advance();
          cur.advance();
          closed = true;
          break;
        }
        cur.advance();
      }
      if (!closed) throw Error(Errc::lex_error, span, "unterminated block comment");
      continue;
    }
    if (c == '"') {
      cur.advance();
      std::string text;
      bool closed = false;
      while (!cur.done()) {
        char d = cur.advance();
        if (d == '\\' && !cur.done()) {
          text.push_back(d);
          text.push_back(cur.advance());
          continue;
        }
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\n') break;
        text.push_back(d);
      }
      if (!closed) throw Error(Errc::lex_error, span, "unterminated string literal");
      push(Tok::string_lit, span, text);
      continue;
    }
    if (c == '\\') {
      cur.advance();
      std::string name;
      while (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        name.push_back(cur.advance());
      }
      if (name.empty()) throw Error(Errc::lex_error, span, "empty escaped identifier");
      push(Tok::ident, span, name);
      continue;
    }
    if (c == '$') {
      cur.advance();
      std::string name = "$";
      while (ident_char(cur.peek())) name.push_back(cur.advance());
      push(Tok::system_ident, span, name);
      continue;
    }
    if (c == '`') {
      throw Error(Errc::unsupported_construct, span,
                  "compiler directives (`...) are out of subset");
    }
    if (ident_start(c)) {
      std::string name;
      while (ident_char(cur.peek())) name.push_back(cur.advance());
      auto it = keyword_table().find(name);
      if (it != keyword_table().end()) {
        push(it->second, span, name);
      } else if (is_reserved(name)) {
        push(Tok::reserved, span, name);
      } else {
        push(Tok::ident, span, name);
      }
      continue;
    }
    if (digit_char(c) || (c == '\'' )) {
      lex_number(cur, out);
      continue;
    }

    cur.advance();
    char n = cur.peek();
    switch (c) {
      case '(': push(Tok::lparen, span, "("); break;
      case ')': push(Tok::rparen, span, ")"); break;
      case '[': push(Tok::lbracket, span, "["); break;
      case ']': push(Tok::rbracket, span, "]"); break;
      case '{': push(Tok::lbrace, span, "{"); break;
      case '}': push(Tok::rbrace, span, "}"); break;
      case ';': push(Tok::semi, span, ";"); break;
      case ',': push(Tok::comma, span, ","); break;
      case '.': push(Tok::dot, span, "."); break;
      case '#': push(Tok::hash, span, "#"); break;
      case '@': push(Tok::at, span, "@"); break;
      case '?': push(Tok::question, span, "?"); break;
      case ':': push(Tok::colon, span, ":"); break;
      case '+': push(Tok::plus, span, "+"); break;
      case '-': push(Tok::minus, span, "-"); break;
      case '*': push(Tok::star, span, "*"); break;
      case '/': push(Tok::slash, span, "/"); break;
      case '%': push(Tok::percent, span, "%"); break;
      case '&':
        if (n == '&') { cur.advance(); push(Tok::amp_amp, span, "&&"); }
        else push(Tok::amp, span, "&");
        break;
      case '|':
        if (n == '|') { cur.advance(); push(Tok::pipe_pipe, span, "||"); }
        else push(Tok::pipe, span, "|");
        break;
      case '^':
        if (n == '~') { cur.advance(); push(Tok::tilde_caret, span, "^~"); }
        else push(Tok::caret, span, "^");
        break;
      case '~':
        if (n == '^') { cur.advance(); push(Tok::tilde_caret, span, "~^"); }
        else if (n == '&') { cur.advance(); push(Tok::tilde_amp, span, "~&"); }
        else if (n == '|') { cur.advance(); push(Tok::tilde_pipe, span, "~|"); }
        else push(Tok::tilde, span, "~");
        break;
      case '!':
        if (n == '=') { cur.advance(); push(Tok::bang_eq, span, "!="); }
        else push(Tok::bang, span, "!");
        break;
      case '=':
        if (n == '=') { cur.advance(); push(Tok::eq_eq, span, "=="); }
        else push(Tok::assign, span, "=");
        break;
      case '<':
        if (n == '=') { cur.advance(); push(Tok::le, span, "<="); }
        else if (n == '<') { cur.advance(); push(Tok::shl, span, "<<"); }
        else push(Tok::lt, span, "<");
        break;
      case '>':
        if (n == '=') { cur.advance(); push(Tok::ge, span, ">="); }
        else if (n == '>') { cur.advance(); push(Tok::shr, span, ">>"); }
        else push(Tok::gt, span, ">");
        break;
      default:
        throw Error(Errc::lex_error, span, std::string("illegal character '") + c + "'");
    }
  }

  Token eof;
  eof.kind = Tok::eof;
  eof.span = cur.span();
  out.push_back(std::move(eof));
  return out;
}

}  // namespace trojanscope
