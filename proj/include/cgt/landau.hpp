#ifndef CGT_LANDAU_HPP
#define CGT_LANDAU_HPP

#include <cstdint>
#include <vector>

#include "cgt/bigint.hpp"

namespace cgt {

// One row of the lcm(1..n) vs g(n) table, with the exact reduced ratio.
struct LandauRow {
  std::uint32_t n = 0;
  BigUint lcm_value;
  BigUint g_value;
  BigUint ratio_num;
  BigUint ratio_den;
};

inline constexpr std::uint32_t kLandauTableCap = 200;

BigUint lcm_upto(std::uint32_t n);

// Maximal element order in the symmetric group on n points: the largest lcm
// of a partition of n. Knapsack over prime powers, one prime per part, with
// leftover budget free (parts of size 1). n <= 200.
BigUint landau_g(std::uint32_t n);

std::vector<LandauRow> landau_table(std::uint32_t max_n);

}  // namespace cgt

#endif
