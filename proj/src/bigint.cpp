#include "cgt/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cgt {

BigUint::BigUint(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

BigUint BigUint::from_string(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("BigUint: empty string");
  BigUint r;
  for (char c : decimal) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigUint: non-digit in \"" + decimal + "\"");
    // r = r*10 + digit
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry != 0) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  return r;
}

std::uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigUint: value exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  // repeated division by 1e9
  std::vector<std::uint32_t> work(limbs_);
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (work.empty()) {
      out.insert(0, chunk);
    } else {
      out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
  }
  return out;
}

std::size_t BigUint::bit_length() const {
  if (is_zero()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& b) {
  if (limbs_.size() < b.limbs_.size()) limbs_.resize(b.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i] + (i < b.limbs_.size() ? b.limbs_[i] : 0u);
    limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& b) {
  if (*this < b) throw std::domain_error("BigUint: negative subtraction result");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (cur < 0) {
      cur += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& b) {
  if (is_zero() || b.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * b.limbs_[j] +
                          out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

bool BigUint::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigUint::shift_left_one_plus_bit(bool b) {
  std::uint32_t carry = b ? 1u : 0u;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry != 0) limbs_.push_back(carry);
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& a, const BigUint& b) {
  if (b.is_zero()) throw std::domain_error("BigUint: division by zero");
  if (a < b) return {BigUint{}, a};
  // shift-subtract long division; values here are a few hundred bits at most
  BigUint q, r;
  std::size_t nbits = a.bit_length();
  q.limbs_.assign((nbits + 31) / 32, 0);
  for (std::size_t i = nbits; i-- > 0;) {
    r.shift_left_one_plus_bit(a.bit(i));
    if (r >= b) {
      r -= b;
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  return {std::move(q), std::move(r)};
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint BigUint::lcm(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint{};
  return (a / gcd(a, b)) * b;
}

BigUint BigUint::pow(const BigUint& base, std::uint64_t exp) {
  BigUint result{1};
  BigUint acc = base;
  while (exp != 0) {
    if (exp & 1) result *= acc;
    exp >>= 1;
    if (exp != 0) acc *= acc;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) {
  return os << v.to_string();
}

}  // namespace cgt
