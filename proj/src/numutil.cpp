#include "cgt/numutil.hpp"

#include <stdexcept>

namespace cgt {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

std::pair<std::uint32_t, std::uint64_t> split_prime_power(std::uint64_t n,
                                                          std::uint64_t p) {
  std::uint32_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return {v, n};
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) {
    if (base != 0 && r > UINT64_MAX / base)
      throw std::overflow_error("pow_u64: overflow");
    r *= base;
  }
  return r;
}

}  // namespace cgt
