#include "trojanscope/bigint.hpp"

#include <algorithm>

#include "trojanscope/diagnostics.hpp"

namespace trojanscope {

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) words_.push_back(v);
}

void BigUint::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BigUint BigUint::from_digits(std::string_view digits, unsigned radix) {
  BigUint out;
  for (char c : digits) {
    if (c == '_') continue;
    unsigned d;
    if (c >= '0' && c <= '9') {
      d = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      d = static_cast<unsigned>(c - 'a') + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = static_cast<unsigned>(c - 'A') + 10;
    } else {
      throw Error(Errc::lex_error, std::string("invalid digit '") + c + "' in constant");
    }
    if (d >= radix) {
      throw Error(Errc::lex_error, std::string("digit '") + c + "' out of range for base " +
                                       std::to_string(radix));
    }
    out = out * BigUint(radix) + BigUint(d);
  }
  return out;
}

unsigned BigUint::bit_length() const {
  if (words_.empty()) return 0;
  std::uint64_t top = words_.back();
  unsigned bits = (static_cast<unsigned>(words_.size()) - 1) * 64;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(unsigned i) const {
  unsigned w = i / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1u;
}

std::uint64_t BigUint::to_u64() const {
  if (words_.size() > 1) {
    throw Error(Errc::elaboration_error, "constant does not fit in 64 bits: " + to_hex());
  }
  return words_.empty() ? 0 : words_[0];
}

BigUint BigUint::truncated(unsigned width) const {
  BigUint out = *this;
  unsigned full = width / 64, rem = width % 64;
  if (out.words_.size() > full + (rem ? 1 : 0)) out.words_.resize(full + (rem ? 1 : 0));
  if (rem && out.words_.size() == full + 1) {
    out.words_[full] &= (rem == 64) ? ~0ull : ((1ull << rem) - 1);
  }
  out.normalize();
  return out;
}

BigUint BigUint::complemented(unsigned width) const {
  BigUint out;
  unsigned nwords = (width + 63) / 64;
  out.words_.assign(nwords, ~0ull);
  for (size_t i = 0; i < words_.size() && i < nwords; ++i) out.words_[i] = ~words_[i];
  return out.truncated(width);
}

BigUint BigUint::operator+(const BigUint& o) const {
  BigUint out;
  size_t n = std::max(words_.size(), o.words_.size());
  out.words_.assign(n + 1, 0);
  unsigned __int128 carry = 0;
  for (size_t i = 0; i < n; ++i) {
    unsigned __int128 s = carry;
    if (i < words_.size()) s += words_[i];
    if (i < o.words_.size()) s += o.words_[i];
    out.words_[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  out.words_[n] = static_cast<std::uint64_t>(carry);
  out.normalize();
  return out;
}

BigUint BigUint::operator-(const BigUint& o) const {
  if (compare(o) < 0) {
    throw Error(Errc::elaboration_error,
                "constant expression underflows (unsigned subtraction)");
  }
  BigUint out;
  out.words_.assign(words_.size(), 0);
  std::int64_t borrow = 0;
  for (size_t i = 0; i < words_.size(); ++i) {
    unsigned __int128 lhs = words_[i];
    unsigned __int128 rhs = (i < o.words_.size() ? o.words_[i] : 0);
    rhs += static_cast<unsigned>(borrow);
    if (lhs >= rhs) {
      out.words_[i] = static_cast<std::uint64_t>(lhs - rhs);
      borrow = 0;
    } else {
      out.words_[i] = static_cast<std::uint64_t>((lhs + (static_cast<unsigned __int128>(1) << 64)) - rhs);
      borrow = 1;
    }
  }
  out.normalize();
  return out;
}

BigUint BigUint::sub_wrapped(const BigUint& a, const BigUint& b, unsigned width) {
  BigUint at = a.truncated(width), bt = b.truncated(width);
  if (at.compare(bt) >= 0) return at - bt;
  BigUint modulus = BigUint(1) << width;
  return (at + modulus) - bt;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint();
  BigUint out;
  out.words_.assign(words_.size() + o.words_.size(), 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    unsigned __int128 carry = 0;
    for (size_t j = 0; j < o.words_.size(); ++j) {
      unsigned __int128 cur = out.words_[i + j];
      cur += static_cast<unsigned __int128>(words_[i]) * o.words_[j] + carry;
      out.words_[i + j] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    size_t k = i + o.words_.size();
    while (carry != 0) {
      unsigned __int128 cur = out.words_[k];
      cur += carry;
      out.words_[k] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
      ++k;
    }
  }
  out.normalize();
  return out;
}

void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
  if (b.is_zero()) throw Error(Errc::elaboration_error, "constant division by zero");
  q = BigUint();
  r = BigUint();
  if (a.compare(b) < 0) {
    r = a;
    return;
  }
  unsigned bits = a.bit_length();
  q.words_.assign(a.words_.size(), 0);
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    r = r << 1;
    if (a.bit(static_cast<unsigned>(i))) r = r + BigUint(1);
    if (r.compare(b) >= 0) {
      r = r - b;
      q.words_[static_cast<unsigned>(i) / 64] |= 1ull << (static_cast<unsigned>(i) % 64);
    }
  }
  q.normalize();
}

BigUint BigUint::operator/(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return q;
}

BigUint BigUint::operator%(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return r;
}

BigUint BigUint::operator&(const BigUint& o) const {
  BigUint out;
  size_t n = std::min(words_.size(), o.words_.size());
  out.words_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) out.words_[i] = words_[i] & o.words_[i];
  out.normalize();
  return out;
}

BigUint BigUint::operator|(const BigUint& o) const {
  BigUint out;
  size_t n = std::max(words_.size(), o.words_.size());
  out.words_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    out.words_[i] = a | b;
  }
  out.normalize();
  return out;
}

BigUint BigUint::operator^(const BigUint& o) const {
  BigUint out;
  size_t n = std::max(words_.size(), o.words_.size());
  out.words_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    out.words_[i] = a ^ b;
  }
  out.normalize();
  return out;
}

BigUint BigUint::operator<<(unsigned n) const {
  if (is_zero()) return BigUint();
  BigUint out;
  unsigned wshift = n / 64, bshift = n % 64;
  out.words_.assign(words_.size() + wshift + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + wshift] |= bshift ? (words_[i] << bshift) : words_[i];
    if (bshift) out.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
  }
  out.normalize();
  return out;
}

BigUint BigUint::operator>>(unsigned n) const {
  unsigned wshift = n / 64, bshift = n % 64;
  if (wshift >= words_.size()) return BigUint();
  BigUint out;
  out.words_.assign(words_.size() - wshift, 0);
  for (size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = words_[i + wshift] >> bshift;
    if (bshift && i + wshift + 1 < words_.size()) {
      out.words_[i] |= words_[i + wshift + 1] << (64 - bshift);
    }
  }
  out.normalize();
  return out;
}

int BigUint::compare(const BigUint& o) const {
  if (words_.size() != o.words_.size()) return words_.size() < o.words_.size() ? -1 : 1;
  for (size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::to_hex() const {
  if (is_zero()) return "0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (size_t i = words_.size(); i-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      unsigned d = (words_[i] >> shift) & 0xF;
      if (out.empty() && d == 0) continue;
      out.push_back(digits[d]);
    }
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint cur = *this;
  const BigUint chunk(10000000000000000000ull);  // 10^19
  std::vector<std::uint64_t> parts;
  while (!cur.is_zero()) {
    BigUint q, r;
    divmod(cur, chunk, q, r);
    parts.push_back(r.words_.empty() ? 0 : r.words_[0]);
    cur = q;
  }
  std::string out = std::to_string(parts.back());
  for (size_t i = parts.size() - 1; i-- > 0;) {
    std::string piece = std::to_string(parts[i]);
    out += std::string(19 - piece.size(), '0') + piece;
  }
  return out;
}

std::string BigUint::to_binary(unsigned width) const {
  std::string out(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if (bit(i)) out[width - 1 - i] = '1';
  }
  return out;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::lex_error: return "LexError";
    case Errc::parse_error: return "ParseError";
    case Errc::unsupported_construct: return "UnsupportedConstruct";
    case Errc::unknown_module: return "UnknownModule";
    case Errc::recursive_instantiation: return "RecursiveInstantiation";
    case Errc::port_arity_mismatch: return "PortArityMismatch";
    case Errc::width_mismatch: return "WidthMismatch";
    case Errc::elaboration_error: return "ElaborationError";
    case Errc::unassigned_signal: return "UnassignedSignal";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::unknown_operator: return "UnknownOperator";
    case Errc::keyword_collision: return "KeywordCollision";
    case Errc::unknown_scope_name: return "UnknownScopeName";
    case Errc::non_termination: return "NonTermination";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::tagset_mismatch: return "TagsetMismatch";
    case Errc::divergence: return "Divergence";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::param_out_of_range: return "ParamOutOfRange";
    case Errc::missing_tap_role: return "MissingTapRole";
    case Errc::combinational_loop: return "CombinationalLoop";
    case Errc::io_error: return "IoError";
    case Errc::usage_error: return "UsageError";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace trojanscope
