#ifndef CGT_INVARIANTS_HPP
#define CGT_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

struct StructuralFlags {
  bool cyclic = false;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool all_sylow_cyclic = false;
};

// Per-prime Sylow data: |P| = p^prime_exponent, exp(P), d(P).
struct SylowData {
  std::uint64_t prime = 0;
  std::uint32_t prime_exponent = 0;
  std::uint64_t subgroup_exponent = 0;
  std::uint32_t d = 0;
};

// Everything the inequality p^(d-2) <= |G|/exp(G) talks about, for one group.
struct GroupInvariants {
  BigUint order;
  std::uint64_t exponent = 1;
  BigUint ratio_E;                     // |G| / exp(G), exact
  std::uint32_t d = 0;                 // minimal number of generators
  std::optional<std::uint64_t> smallest_prime;  // absent only for order 1
  std::uint64_t max_element_order = 1;
  StructuralFlags flags;
  std::vector<SylowData> sylow;        // ascending prime order
  std::string exponent_method;         // "enumeration" or "sylow-product"
};

// exp(G) and the maximal element order, in one pass over the element stream.
std::pair<std::uint64_t, std::uint64_t> exponent_and_max_order(const PermGroup& G,
                                                               std::uint64_t enum_cap);
std::uint64_t exponent(const PermGroup& G, std::uint64_t enum_cap);
std::uint64_t max_element_order(const PermGroup& G, std::uint64_t enum_cap);

// Fallback that multiplies exp(P) over a Sylow system. This is exactly the
// per-prime identity, so verification of that identity must never use it.
std::uint64_t exponent_via_sylow_product(const PermGroup& G, std::uint64_t enum_cap);

// |G| / exp(G). Non-divisibility would falsify exponent | order and is
// reported as a logic error.
BigUint ratio_E(const PermGroup& G, std::uint64_t enum_cap);

// Least prime factor of |G|; absent for the trivial group.
std::optional<std::uint64_t> smallest_prime(const PermGroup& G);

// A Sylow p-subgroup: seeded with a p-element of maximal order from the
// stream, then grown by adjoining normalizing p-parts until the full p-part
// of |G| is reached (the final order is checked).
PermGroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t enum_cap);

// Sylow subgroups for every prime dividing |G|, ascending.
std::map<std::uint64_t, PermGroup> sylow_system(const PermGroup& G,
                                                std::uint64_t enum_cap);

// Exact minimal number of generators. For p-groups this is the Frattini
// rank (Burnside basis theorem, via d_pgroup); everything else goes through
// the exhaustive search below.
std::uint32_t min_generators(const PermGroup& G, std::uint64_t enum_cap);

// The exhaustive route, also for p-groups: tuple search over k = 0, 1, 2, ...
// The first slot ranges over conjugacy class representatives and later slots
// over one representative per coset of the subgroup generated so far (the
// join <H,x> depends only on the coset Hx); failed (subgroup, remaining)
// states are memoized. All prunings are exact, no randomized early exit.
std::uint32_t min_generators_by_search(const PermGroup& G, std::uint64_t enum_cap);

// d(P) for a p-group via the Frattini quotient: Phi(P) is generated by the
// commutators of generator pairs and the p-th powers of generators, closed
// normally; d = log_p [P : Phi(P)].
std::uint32_t d_pgroup(const PermGroup& P, std::uint64_t p, std::uint64_t enum_cap);

StructuralFlags structural_flags(const PermGroup& G, std::uint64_t enum_cap);
StructuralFlags structural_flags(const PermGroup& G,
                                 const std::map<std::uint64_t, PermGroup>& sylows,
                                 std::uint64_t enum_cap);

GroupInvariants invariants_report(const PermGroup& G, std::uint64_t enum_cap);
GroupInvariants invariants_report(const PermGroup& G,
                                  const std::map<std::uint64_t, PermGroup>& sylows,
                                  std::uint64_t enum_cap);

// Conjugacy class representatives in element-stream order (identity omitted),
// computed as orbits of conjugation by the generators.
std::vector<Perm> conjugacy_class_reps(const PermGroup& G, std::uint64_t enum_cap);

}  // namespace cgt

#endif
