#include "cgt/landau.hpp"

#include <stdexcept>

#include "cgt/numutil.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

BigUint lcm_upto(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
  BigUint acc{1};
  for (std::uint32_t k = 2; k <= n; ++k) acc = BigUint::lcm(acc, BigUint{k});
  return acc;
}

namespace {

// best[m] = largest lcm of a partition of m into prime-power parts with
// distinct primes; processed one prime at a time, budget descending, so each
// prime contributes at most one part
std::vector<BigUint> landau_best(std::uint32_t n) {
  std::vector<BigUint> best(n + 1, BigUint{1});
  for (std::uint64_t p : primes_upto(n)) {
    for (std::uint32_t m = n; m >= p; --m) {
      for (std::uint64_t pk = p; pk <= m; pk *= p) {
        BigUint candidate = best[m - pk] * BigUint{pk};
        if (candidate > best[m]) best[m] = std::move(candidate);
      }
    }
  }
  return best;
}

}  // namespace

BigUint landau_g(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("landau_g: n must be >= 1");
  if (n > kLandauTableCap) throw cap_exceeded("landau_table_cap", kLandauTableCap);
  std::vector<BigUint> best = landau_best(n);
  BigUint g{1};
  for (const BigUint& v : best)
    if (v > g) g = v;
  return g;
}

std::vector<LandauRow> landau_table(std::uint32_t max_n) {
  if (max_n < 1) throw std::invalid_argument("landau_table: max_n must be >= 1");
  if (max_n > kLandauTableCap)
    throw cap_exceeded("landau_table_cap", kLandauTableCap);

  std::vector<BigUint> best = landau_best(max_n);
  std::vector<LandauRow> rows;
  BigUint lcm{1};
  BigUint g{1};
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    lcm = BigUint::lcm(lcm, BigUint{n});
    if (best[n] > g) g = best[n];  // g is nondecreasing in the budget
    LandauRow row;
    row.n = n;
    row.lcm_value = lcm;
    row.g_value = g;
    BigUint d = BigUint::gcd(lcm, g);
    row.ratio_num = lcm / d;
    row.ratio_den = g / d;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cgt
