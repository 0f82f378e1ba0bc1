#include "cgt/theorem.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "cgt/group_ops.hpp"
#include "cgt/numutil.hpp"

namespace cgt {

GroupContext GroupContext::analyze(const PermGroup& G, std::uint64_t enum_cap) {
  GroupContext ctx{G, {}, {}};
  ctx.sylows = sylow_system(G, enum_cap);
  ctx.inv = invariants_report(G, ctx.sylows, enum_cap);
  return ctx;
}

TheoremVerdict check_theorem(const GroupContext& ctx) {
  TheoremVerdict v;
  if (ctx.inv.order.is_one()) return v;  // p undefined, honestly inapplicable

  v.applicable = true;
  BigUint p{*ctx.inv.smallest_prime};
  v.lhs_scaled = BigUint::pow(p, ctx.inv.d);
  v.rhs_scaled = ctx.inv.ratio_E * p * p;
  v.holds = v.lhs_scaled <= v.rhs_scaled;
  v.equality = v.lhs_scaled == v.rhs_scaled;
  v.predicted_equality =
      !ctx.inv.flags.cyclic && ctx.inv.order == BigUint{ctx.inv.exponent};
  v.consistent = v.equality == v.predicted_equality;
  return v;
}

bool check_lemma(const GroupContext& ctx, std::uint64_t enum_cap) {
  if (!ctx.inv.flags.nilpotent)
    throw std::invalid_argument("check_lemma: group is not nilpotent");
  if (ctx.inv.order.is_one()) return true;

  // proof ingredient (a): nilpotency provides an element of full exponent
  if (ctx.inv.max_element_order != ctx.inv.exponent) return false;

  BigUint p{*ctx.inv.smallest_prime};
  const BigUint& E = ctx.inv.ratio_E;

  // p^(d-1) <= E, scaled to p^d <= E*p
  if (BigUint::pow(p, ctx.inv.d) > E * p) return false;

  // proof ingredient (b): greedy chain from a maximal-order element; at every
  // step |G : <x_1..x_i>| * p^(i-1) <= E
  const PermGroup& G = ctx.group;
  std::vector<Perm> elements = G.elements(enum_cap);

  Perm x = Perm::identity(G.degree());
  for (const Perm& e : elements) {
    if (e.order() == ctx.inv.exponent) {
      x = e;
      break;
    }
  }
  std::vector<Perm> gens{x};
  PermGroup H(G.degree(), gens);
  BigUint p_power{1};  // p^(i-1)
  while (true) {
    BigUint index = G.order() / H.order();
    if (index * p_power > E) return false;
    if (index.is_one()) break;
    bool extended = false;
    for (const Perm& e : elements) {
      if (!H.contains(e)) {
        gens.push_back(e);
        H = PermGroup(G.degree(), gens);
        extended = true;
        break;
      }
    }
    if (!extended) break;  // proper subgroup but nothing outside: impossible
    p_power *= p;
  }
  return true;
}

bool check_multiplicativity(const GroupContext& ctx, std::uint64_t enum_cap) {
  BigUint product{1};
  for (const auto& [p, P] : ctx.sylows) {
    (void)p;
    product *= ratio_E(P, enum_cap);
  }
  return ctx.inv.ratio_E == product;
}

namespace {

std::string describe_skip(const std::string& stage, const cap_exceeded& e) {
  return stage + ": " + e.what();
}

}  // namespace

SectionSampleReport check_section_divisibility(const GroupContext& ctx,
                                               std::size_t sample_count,
                                               std::uint64_t seed,
                                               std::uint64_t enum_cap,
                                               std::uint64_t coset_cap) {
  SectionSampleReport report;
  report.seed = seed;

  const PermGroup& G = ctx.group;
  std::vector<Perm> elements = G.elements(enum_cap);
  std::mt19937_64 rng(seed);
  auto random_element = [&](const std::vector<Perm>& pool) -> const Perm& {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
  };

  const BigUint& E_G = ctx.inv.ratio_E;

  auto add_sample = [&](const PermGroup& H, const PermGroup& N) {
    try {
      PermGroup Q = quotient(H, N, coset_cap);
      BigUint E_Q = ratio_E(Q, enum_cap);
      bool divides = E_G.divisible_by(E_Q);
      report.samples.push_back(
          {H.order(), N.order(), std::move(E_Q), divides});
    } catch (const cap_exceeded& e) {
      report.skipped.push_back(describe_skip("quotient", e));
    }
  };

  auto sample_subgroup = [&](const PermGroup& H) {
    std::vector<Perm> h_elements;
    try {
      h_elements = H.elements(enum_cap);
    } catch (const cap_exceeded& e) {
      report.skipped.push_back(describe_skip("subgroup elements", e));
      return;
    }
    add_sample(H, PermGroup::trivial(G.degree()));
    add_sample(H, derived_subgroup(H));
    add_sample(H, normal_closure(H, {random_element(h_elements)}));
  };

  while (report.samples.size() < sample_count) {
    std::size_t before = report.samples.size();

    sample_subgroup(G);
    for (const auto& [p, P] : ctx.sylows) {
      (void)p;
      sample_subgroup(P);
    }
    sample_subgroup(subgroup(G, {random_element(elements)}));
    sample_subgroup(
        subgroup(G, {random_element(elements), random_element(elements)}));

    if (report.samples.size() == before) break;  // caps block everything
  }
  return report;
}

bool check_star3(const GroupContext& ctx) {
  if (ctx.inv.order.is_one())
    throw std::invalid_argument("check_star3: needs |G| >= 2");
  BigUint p{*ctx.inv.smallest_prime};
  BigUint lhs = p * p;
  for (const SylowData& s : ctx.inv.sylow)
    lhs *= BigUint::pow(BigUint{s.prime}, s.d > 0 ? s.d - 1 : 0);
  BigUint rhs = BigUint::pow(p, ctx.inv.d);
  return lhs >= rhs;
}

bool check_gl_bound(const GroupContext& ctx) {
  if (ctx.inv.order.is_one())
    throw std::invalid_argument("check_gl_bound: needs |G| >= 2");
  std::uint32_t max_d = 0;
  for (const SylowData& s : ctx.inv.sylow) max_d = std::max(max_d, s.d);
  return ctx.inv.d <= 1 + max_d;
}

namespace {

// right-regular action of G on its own elements
PermGroup regular_representation(const std::vector<Perm>& elements,
                                 const std::vector<Perm>& gens) {
  std::unordered_map<Perm, Perm::point, PermHash> index;
  for (Perm::point i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], i);
  std::vector<Perm> images;
  for (const Perm& g : gens) {
    std::vector<Perm::point> img(elements.size());
    for (Perm::point i = 0; i < elements.size(); ++i)
      img[i] = index.at(elements[i] * g);
    images.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<Perm::point>(elements.size()), images);
}

}  // namespace

bool check_proposition(const GroupContext& ctx, std::uint64_t enum_cap) {
  // odd E: the 2-part of the exponent equals the 2-part of the order
  bool e_odd = !ctx.inv.ratio_E.divisible_by(BigUint{2});
  if (!e_odd) return true;  // vacuous

  if (!ctx.inv.flags.solvable) return false;

  std::uint64_t n = ctx.group.order_u64(enum_cap);
  if (n % 2 != 0) return true;  // odd order, nothing more to verify

  const PermGroup& P2 = ctx.sylows.at(2);
  std::uint64_t m = P2.order_u64(enum_cap);
  if (max_element_order(P2, enum_cap) != m) return false;  // must be cyclic

  // parity of the regular image of the Sylow-2 generator: |G|/m cycles of
  // length m, sign = (-1)^((m-1) * |G|/m)
  if (((m - 1) * (n / m)) % 2 != 1) return false;

  if (n <= 60) {
    // cross-check against the explicit regular action
    std::vector<Perm> elements = ctx.group.elements(enum_cap);
    Perm x = Perm::identity(ctx.group.degree());
    for (const Perm& e : elements) {
      if (e.order() == m && P2.contains(e)) {
        x = e;
        break;
      }
    }
    PermGroup reg = regular_representation(elements, {x});
    if (reg.generators()[0].sign() != -1) return false;

    // the parity kernel in the regular image has index exactly 2
    std::size_t even_count = 0;
    PermGroup full = regular_representation(elements, elements);
    for (const Perm& img : full.generators())
      if (img.sign() == 1) ++even_count;
    if (even_count * 2 != elements.size()) return false;
  }
  return true;
}

bool is_d_maximal(const GroupContext& ctx, std::uint64_t enum_cap,
                  std::uint64_t lattice_cap) {
  std::vector<PermGroup> maximals = maximal_subgroups(ctx.group, lattice_cap);
  if (maximals.empty()) return true;  // no proper subgroups at all
  std::uint32_t best = 0;
  for (const PermGroup& M : maximals)
    best = std::max(best, min_generators(M, enum_cap));
  return ctx.inv.d > best;
}

}  // namespace cgt
