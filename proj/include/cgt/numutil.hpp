#ifndef CGT_NUMUTIL_HPP
#define CGT_NUMUTIL_HPP

#include <cstdint>
#include <vector>

namespace cgt {

// (prime, multiplicity) pairs in ascending prime order, by trial division.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::vector<std::uint64_t> primes_upto(std::uint64_t n);

// p-adic valuation and the coprime cofactor: n = p^v * m with p coprime to m.
std::pair<std::uint32_t, std::uint64_t> split_prime_power(std::uint64_t n,
                                                          std::uint64_t p);

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp);

}  // namespace cgt

#endif
