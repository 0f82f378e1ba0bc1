#include "cgt/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cgt/group_ops.hpp"
#include "cgt/numutil.hpp"
#include "cgt/small_group.hpp"

namespace cgt {

std::pair<std::uint64_t, std::uint64_t> exponent_and_max_order(
    const PermGroup& G, std::uint64_t enum_cap) {
  std::uint64_t lcm = 1;
  std::uint64_t max_order = 1;
  G.for_each_element(
      [&](const Perm& p) {
        std::uint64_t m = p.order();
        lcm = std::lcm(lcm, m);
        max_order = std::max(max_order, m);
      },
      enum_cap);
  return {lcm, max_order};
}

std::uint64_t exponent(const PermGroup& G, std::uint64_t enum_cap) {
  return exponent_and_max_order(G, enum_cap).first;
}

std::uint64_t max_element_order(const PermGroup& G, std::uint64_t enum_cap) {
  return exponent_and_max_order(G, enum_cap).second;
}

std::uint64_t exponent_via_sylow_product(const PermGroup& G,
                                         std::uint64_t enum_cap) {
  std::uint64_t result = 1;
  for (const auto& [p, P] : sylow_system(G, enum_cap))
    result *= exponent(P, enum_cap);
  return result;
}

BigUint ratio_E(const PermGroup& G, std::uint64_t enum_cap) {
  BigUint order = G.order();
  BigUint exp{exponent(G, enum_cap)};
  auto [q, r] = BigUint::divmod(order, exp);
  if (!r.is_zero())
    throw std::logic_error("ratio_E: exponent does not divide the order");
  return q;
}

std::optional<std::uint64_t> smallest_prime(const PermGroup& G) {
  BigUint order = G.order();
  if (order.is_one()) return std::nullopt;
  if (order.fits_u64()) {
    std::uint64_t n = order.to_u64();
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
      if (n % p == 0) return p;
    return n;
  }
  // huge order: probe small primes; permutation group orders are smooth
  for (std::uint64_t p : primes_upto(1000000))
    if (order.divisible_by(BigUint{p})) return p;
  throw std::runtime_error("smallest_prime: no factor below 10^6");
}

std::vector<Perm> conjugacy_class_reps(const PermGroup& G,
                                       std::uint64_t enum_cap) {
  std::vector<Perm> elements = G.elements(enum_cap);
  std::unordered_set<Perm, PermHash> visited;
  visited.reserve(elements.size());

  std::vector<Perm> reps;
  for (const Perm& e : elements) {
    if (e.is_identity() || visited.count(e)) continue;
    reps.push_back(e);
    std::vector<Perm> queue{e};
    visited.insert(e);
    while (!queue.empty()) {
      Perm cur = std::move(queue.back());
      queue.pop_back();
      for (const Perm& g : G.generators()) {
        Perm c = cur.conjugated_by(g);
        if (visited.insert(c).second) queue.push_back(std::move(c));
      }
    }
  }
  return reps;
}

PermGroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t enum_cap) {
  std::uint64_t n = G.order_u64(enum_cap);
  auto [a, rest] = split_prime_power(n, p);
  (void)rest;
  if (a == 0)
    throw std::invalid_argument("sylow: " + std::to_string(p) +
                                " does not divide the group order");
  std::uint64_t p_part = pow_u64(p, a);

  // p-power parts of the stream, deduplicated, stream order
  std::vector<Perm> candidates;
  std::unordered_set<Perm, PermHash> seen;
  Perm start = Perm::identity(G.degree());
  std::uint64_t start_order = 1;
  G.for_each_element(
      [&](const Perm& e) {
        std::uint64_t m = e.order();
        auto [b, coprime] = split_prime_power(m, p);
        if (b == 0) return;
        Perm y = e.pow(coprime);
        std::uint64_t y_order = pow_u64(p, b);
        if (seen.insert(y).second) {
          candidates.push_back(y);
          if (y_order > start_order) {
            start = candidates.back();
            start_order = y_order;
          }
        }
      },
      enum_cap);

  std::vector<Perm> gens{start};
  PermGroup P(G.degree(), gens);
  while (P.order_u64(enum_cap) < p_part) {
    bool grew = false;
    for (const Perm& y : candidates) {
      if (P.contains(y)) continue;
      bool normalizes = true;
      for (const Perm& s : gens) {
        if (!P.contains(s.conjugated_by(y))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(y);
      P = PermGroup(G.degree(), gens);
      grew = true;
      break;
    }
    if (!grew)
      throw std::logic_error("sylow: stuck below the full p-part");
  }
  if (P.order_u64(enum_cap) != p_part)
    throw std::logic_error("sylow: final order is not the p-part");
  return P;
}

std::map<std::uint64_t, PermGroup> sylow_system(const PermGroup& G,
                                                std::uint64_t enum_cap) {
  std::map<std::uint64_t, PermGroup> out;
  std::uint64_t n = G.order_u64(enum_cap);
  for (auto [p, e] : factorize(n)) {
    (void)e;
    out.emplace(p, sylow(G, p, enum_cap));
  }
  return out;
}

namespace {

constexpr std::uint64_t kTableSearchCap = 2048;

struct IdxVecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ v.size();
    for (std::uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Exhaustive reachability search over the dense table: can `remaining` more
// generators extend H to the whole group? States are memoized by element set;
// both prunings below are exactness-preserving.
class TableSearch {
public:
  TableSearch(const SmallGroupTable& table) : t_(table) {}

  bool reachable(const SmallGroupTable::Sub& H, int remaining) {
    if (H.order() == t_.size()) return true;
    if (remaining == 0) return false;

    auto& state = memo_[H.elems];
    if (remaining <= state.max_fail) return false;
    if (remaining >= state.min_succ) return true;

    // one join per coset of H, largest extension first
    std::vector<SmallGroupTable::Sub> next;
    std::vector<std::uint64_t> covered = H.mask;
    auto test = [&](std::uint32_t e) {
      return (covered[e >> 6] >> (e & 63)) & 1u;
    };
    for (std::uint32_t x = 0; x < t_.size(); ++x) {
      if (test(x)) continue;
      for (auto h : H.elems) {
        auto e = t_.mul(h, static_cast<SmallGroupTable::idx>(x));
        covered[e >> 6] |= (std::uint64_t{1} << (e & 63));
      }
      next.push_back(t_.join(H, static_cast<SmallGroupTable::idx>(x)));
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const auto& a, const auto& b) { return a.order() > b.order(); });

    bool ok = false;
    for (const auto& K : next) {
      if (reachable(K, remaining - 1)) {
        ok = true;
        break;
      }
    }
    if (ok) {
      state.min_succ = std::min(state.min_succ, remaining);
    } else {
      state.max_fail = std::max(state.max_fail, remaining);
    }
    return ok;
  }

private:
  struct State {
    int max_fail = -1;
    int min_succ = INT_MAX;
  };

  const SmallGroupTable& t_;
  std::unordered_map<std::vector<std::uint16_t>, State, IdxVecHash> memo_;
};

// Same search over stabilizer chains, for groups too large for the dense
// table. No memoization; coset deduplication uses canonical representatives.
bool chain_search(const PermGroup& G, const BigUint& full_order,
                  const std::vector<Perm>& sorted_elements,
                  std::vector<Perm>& gens, int remaining) {
  PermGroup H(G.degree(), gens);
  if (H.order() == full_order) return true;
  if (remaining == 0) return false;

  const StabilizerChain& hc = H.chain();
  std::unordered_set<Perm, PermHash> seen_cosets;
  for (const Perm& e : sorted_elements) {
    if (hc.contains(e)) continue;
    Perm canon = canonical_coset_rep(hc, e);
    if (!seen_cosets.insert(std::move(canon)).second) continue;
    gens.push_back(e);
    bool ok = chain_search(G, full_order, sorted_elements, gens, remaining - 1);
    gens.pop_back();
    if (ok) return true;
  }
  return false;
}

// stream order, stably sorted by descending element order; generating tuples
// surface much sooner when large-order elements come first
template <typename T, typename OrderOf>
void sort_by_order_desc(std::vector<T>& items, OrderOf order_of) {
  std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    return order_of(a) > order_of(b);
  });
}

}  // namespace

std::uint32_t min_generators(const PermGroup& G, std::uint64_t enum_cap) {
  if (G.order().is_one()) return 0;
  std::uint64_t n = G.order_u64(enum_cap);
  auto factors = factorize(n);
  if (factors.size() == 1) return d_pgroup(G, factors[0].first, enum_cap);
  return min_generators_by_search(G, enum_cap);
}

std::uint32_t min_generators_by_search(const PermGroup& G, std::uint64_t enum_cap) {
  if (G.order().is_one()) return 0;
  std::uint64_t n = G.order_u64(enum_cap);

  auto [exp, max_order] = exponent_and_max_order(G, enum_cap);
  (void)exp;
  if (max_order == n) return 1;  // cyclic

  std::vector<Perm> reps = conjugacy_class_reps(G, enum_cap);
  sort_by_order_desc(reps, [](const Perm& p) { return p.order(); });

  std::uint32_t k_limit = 2;
  while ((std::uint64_t{1} << k_limit) < n) ++k_limit;  // d <= log2 |G|

  if (n <= kTableSearchCap) {
    SmallGroupTable table(G, kTableSearchCap);
    TableSearch search(table);
    for (std::uint32_t k = 2; k <= k_limit; ++k) {
      for (const Perm& rep : reps) {
        auto H = table.cyclic_subgroup(table.index_of(rep));
        if (search.reachable(H, static_cast<int>(k) - 1)) return k;
      }
    }
  } else {
    std::vector<Perm> sorted_elements = G.elements(enum_cap);
    sort_by_order_desc(sorted_elements, [](const Perm& p) { return p.order(); });
    BigUint full_order = G.order();
    for (std::uint32_t k = 2; k <= k_limit; ++k) {
      for (const Perm& rep : reps) {
        std::vector<Perm> gens{rep};
        if (chain_search(G, full_order, sorted_elements, gens,
                         static_cast<int>(k) - 1))
          return k;
      }
    }
  }
  throw std::logic_error("min_generators: search exceeded the log2 bound");
}

std::uint32_t d_pgroup(const PermGroup& P, std::uint64_t p,
                       std::uint64_t enum_cap) {
  std::uint64_t n = P.order_u64(enum_cap);
  auto [a, rest] = split_prime_power(n, p);
  if (rest != 1)
    throw std::invalid_argument("d_pgroup: group order is not a power of " +
                                std::to_string(p));
  if (a == 0) return 0;

  const auto& gens = P.generators();
  std::vector<Perm> seed;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  }
  for (const Perm& g : gens) {
    Perm q = g.pow(p);
    if (!q.is_identity()) seed.push_back(std::move(q));
  }
  PermGroup frattini = normal_closure(P, seed);

  std::uint64_t index = n / frattini.order_u64(enum_cap);
  std::uint32_t d = 0;
  while (index > 1) {
    if (index % p != 0)
      throw std::logic_error("d_pgroup: Frattini index is not a p-power");
    index /= p;
    ++d;
  }
  return d;
}

StructuralFlags structural_flags(const PermGroup& G, std::uint64_t enum_cap) {
  return structural_flags(G, sylow_system(G, enum_cap), enum_cap);
}

StructuralFlags structural_flags(const PermGroup& G,
                                 const std::map<std::uint64_t, PermGroup>& sylows,
                                 std::uint64_t enum_cap) {
  StructuralFlags flags;
  std::uint64_t n = G.order_u64(enum_cap);

  flags.cyclic = max_element_order(G, enum_cap) == n;

  flags.abelian = true;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size() && flags.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && flags.abelian; ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) flags.abelian = false;

  flags.nilpotent = true;
  flags.all_sylow_cyclic = true;
  for (const auto& [p, P] : sylows) {
    (void)p;
    for (const Perm& s : P.generators()) {
      for (const Perm& g : G.generators()) {
        if (!P.contains(s.conjugated_by(g))) {
          flags.nilpotent = false;
          break;
        }
      }
      if (!flags.nilpotent) break;
    }
    if (max_element_order(P, enum_cap) != P.order_u64(enum_cap))
      flags.all_sylow_cyclic = false;
  }

  // derived series; orders strictly decrease until it stabilizes
  flags.solvable = false;
  PermGroup cur = G;
  BigUint cur_order = cur.order();
  while (true) {
    if (cur_order.is_one()) {
      flags.solvable = true;
      break;
    }
    PermGroup next = derived_subgroup(cur);
    BigUint next_order = next.order();
    if (next_order == cur_order) break;  // perfect, nontrivial
    cur = std::move(next);
    cur_order = std::move(next_order);
  }
  return flags;
}

GroupInvariants invariants_report(const PermGroup& G, std::uint64_t enum_cap) {
  return invariants_report(G, sylow_system(G, enum_cap), enum_cap);
}

GroupInvariants invariants_report(const PermGroup& G,
                                  const std::map<std::uint64_t, PermGroup>& sylows,
                                  std::uint64_t enum_cap) {
  GroupInvariants inv;
  inv.order = G.order();

  auto [exp, max_order] = exponent_and_max_order(G, enum_cap);
  inv.exponent = exp;
  inv.exponent_method = "enumeration";
  inv.max_element_order = max_order;

  auto [q, r] = BigUint::divmod(inv.order, BigUint{exp});
  if (!r.is_zero())
    throw std::logic_error("invariants: exponent does not divide the order");
  inv.ratio_E = std::move(q);

  inv.smallest_prime = smallest_prime(G);
  inv.d = min_generators(G, enum_cap);
  inv.flags = structural_flags(G, sylows, enum_cap);

  for (const auto& [p, P] : sylows) {
    SylowData data;
    data.prime = p;
    auto [a, rest] = split_prime_power(P.order_u64(enum_cap), p);
    if (rest != 1) throw std::logic_error("invariants: bad Sylow order");
    data.prime_exponent = a;
    data.subgroup_exponent = exponent(P, enum_cap);
    data.d = d_pgroup(P, p, enum_cap);
    inv.sylow.push_back(data);
  }
  return inv;
}

}  // namespace cgt
