#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trojanscope {

/// Arbitrary-precision unsigned integer.
///
/// Verilog constants in the supported subset can be wider than 64 bits
/// (128-bit key material is routine), so constant values are kept as
/// little-endian vectors of 64-bit words. Only the operations the
/// constant folder and the graph builder need are provided.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit by design, mirrors integer literals

  /// Parse a digit string in the given radix (2, 8, 10 or 16).
  /// Underscores are skipped. Throws Error(lex_error) on a bad digit.
  static BigUint from_digits(std::string_view digits, unsigned radix);

  bool is_zero() const { return words_.empty(); }
  unsigned bit_length() const;
  bool bit(unsigned i) const;

  bool fits_u64() const { return words_.size() <= 1; }
  std::uint64_t to_u64() const;  // throws Error(elaboration_error) if > 64 bits

  /// Keep only the low `width` bits.
  BigUint truncated(unsigned width) const;
  /// Bitwise complement within `width` bits.
  BigUint complemented(unsigned width) const;

  BigUint operator+(const BigUint& o) const;
  /// Throws Error(elaboration_error) on underflow; use sub_wrapped for
  /// modular arithmetic.
  BigUint operator-(const BigUint& o) const;
  BigUint operator*(const BigUint& o) const;
  BigUint operator/(const BigUint& o) const;  // throws on divide by zero
  BigUint operator%(const BigUint& o) const;

  static BigUint sub_wrapped(const BigUint& a, const BigUint& b, unsigned width);

  BigUint operator&(const BigUint& o) const;
  BigUint operator|(const BigUint& o) const;
  BigUint operator^(const BigUint& o) const;
  BigUint operator<<(unsigned n) const;
  BigUint operator>>(unsigned n) const;

  int compare(const BigUint& o) const;
  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator!=(const BigUint& o) const { return compare(o) != 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

  std::string to_hex() const;      // lowercase, no leading zeros, "0" when zero
  std::string to_decimal() const;
  std::string to_binary(unsigned width) const;  // exactly `width` digits

 private:
  void normalize();
  static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);

  std::vector<std::uint64_t> words_;  // little-endian, no trailing zero words
};

}  // namespace trojanscope
