#ifndef CGT_BIGINT_HPP
#define CGT_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cgt {

// Unsigned arbitrary-precision integer. Orders, exponents and the scaled
// inequality sides are exact integers and must never pass through floating
// point; values stay small (a few hundred bits), so schoolbook arithmetic
// with 32-bit limbs is plenty.
class BigUint {
public:
  BigUint() = default;
  BigUint(std::uint64_t v);
  static BigUint from_string(const std::string& decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // throws std::overflow_error if too large

  std::string to_string() const;

  std::size_t bit_length() const;

  // -1, 0, +1 for a<b, a==b, a>b
  static int compare(const BigUint& a, const BigUint& b);

  friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

  BigUint& operator+=(const BigUint& b);
  BigUint& operator-=(const BigUint& b);  // requires *this >= b
  BigUint& operator*=(const BigUint& b);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  // quotient and remainder; throws std::domain_error on division by zero
  static std::pair<BigUint, BigUint> divmod(const BigUint& a, const BigUint& b);

  friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
  friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

  bool divisible_by(const BigUint& b) const { return divmod(*this, b).second.is_zero(); }

  static BigUint gcd(BigUint a, BigUint b);
  static BigUint lcm(const BigUint& a, const BigUint& b);
  static BigUint pow(const BigUint& base, std::uint64_t exp);

private:
  // little-endian limbs, no trailing zeros; zero is the empty vector
  std::vector<std::uint32_t> limbs_;

  void trim();
  bool bit(std::size_t i) const;
  void shift_left_one_plus_bit(bool b);  // *this = *this * 2 + b
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace cgt

#endif
