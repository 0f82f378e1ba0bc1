#ifndef CGT_THEOREM_HPP
#define CGT_THEOREM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/invariants.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

// One group with everything the checks need computed once.
struct GroupContext {
  PermGroup group;
  std::map<std::uint64_t, PermGroup> sylows;
  GroupInvariants inv;

  static GroupContext analyze(const PermGroup& G, std::uint64_t enum_cap);
};

// Exact-integer verdict for p^(d-2) <= |G|/exp(G), compared in the scaled
// form p^d <= E * p^2 so that d in {0, 1} needs no negative exponents.
struct TheoremVerdict {
  bool applicable = false;  // false only for the trivial group
  bool holds = false;
  bool equality = false;
  BigUint lhs_scaled;  // p^d
  BigUint rhs_scaled;  // E * p^2
  bool predicted_equality = false;  // noncyclic and exp(G) = |G|
  bool consistent = false;          // equality <=> predicted_equality

  bool passed() const { return !applicable || (holds && consistent); }
};

struct SectionSample {
  BigUint subgroup_order;
  BigUint normal_order;
  BigUint quotient_E;
  bool divides = false;
};

// Seeded sampling evidence that E(H/N) divides E(G). Skipped samples are
// recorded, never silently dropped.
struct SectionSampleReport {
  std::uint64_t seed = 0;
  std::vector<SectionSample> samples;
  std::vector<std::string> skipped;

  bool all_divide() const {
    for (const auto& s : samples)
      if (!s.divides) return false;
    return true;
  }
};

TheoremVerdict check_theorem(const GroupContext& ctx);

// Nilpotent case: p^(d-1) <= E, plus the two proof ingredients: an element of
// order exp(G) exists, and every greedy extension chain x_1, x_2, ... with
// x_{i+1} outside <x_1..x_i> keeps |G : <x_1..x_i>| * p^(i-1) <= E.
// Throws std::invalid_argument on non-nilpotent input.
bool check_lemma(const GroupContext& ctx, std::uint64_t enum_cap);

// E(G) = product of E(P) over a full Sylow system, with E(G) from the
// enumerated exponent so the identity is not assumed by its own test.
bool check_multiplicativity(const GroupContext& ctx, std::uint64_t enum_cap);

SectionSampleReport check_section_divisibility(const GroupContext& ctx,
                                               std::size_t sample_count,
                                               std::uint64_t seed,
                                               std::uint64_t enum_cap,
                                               std::uint64_t coset_cap);

// p^2 * prod_i p_i^(d(P_i)-1) >= p^d(G): the log-free form of the summed
// logarithmic inequality, obtained by exponentiating base p.
bool check_star3(const GroupContext& ctx);

// d(G) <= 1 + max_i d(P_i)
bool check_gl_bound(const GroupContext& ctx);

// If E(G) is odd the group must be solvable; when |G| is even the cyclic
// Sylow-2 generator must act as an odd permutation in the regular
// representation, by the parity formula sign = (-1)^((m-1)|G|/m). For
// |G| <= 60 the formula is cross-checked against the explicit regular action,
// including the index-2 parity kernel.
bool check_proposition(const GroupContext& ctx, std::uint64_t enum_cap);

// d(G) > d(M) for every maximal subgroup M.
bool is_d_maximal(const GroupContext& ctx, std::uint64_t enum_cap,
                  std::uint64_t lattice_cap);

}  // namespace cgt

#endif
