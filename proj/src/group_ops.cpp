#include "cgt/group_ops.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cgt/small_group.hpp"

namespace cgt {

Perm Homomorphism::apply_word(const std::vector<std::size_t>& word) const {
  Perm p = Perm::identity(image.degree());
  for (std::size_t i : word) p *= generator_images.at(i);
  return p;
}

bool Homomorphism::spot_check(std::size_t word_count, std::uint64_t seed) const {
  if (source.generators().empty()) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_gen(0, source.generators().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_len(1, 8);

  std::unordered_map<Perm, Perm, PermHash> seen;
  for (std::size_t w = 0; w < word_count; ++w) {
    std::vector<std::size_t> word(pick_len(rng));
    for (auto& g : word) g = pick_gen(rng);

    Perm src = Perm::identity(source.degree());
    for (std::size_t i : word) src *= source.generators()[i];
    Perm img = apply_word(word);

    auto [it, fresh] = seen.emplace(std::move(src), img);
    if (!fresh && it->second != img) return false;
  }
  return true;
}

PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens) {
  return PermGroup(G.degree(), std::move(gens));
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed) {
    if (s.degree() != G.degree())
      throw std::invalid_argument("normal_closure: degree mismatch");
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup K(G.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
      for (const Perm& g : G.generators()) {
        Perm c = gens[i].conjugated_by(g);
        if (!K.contains(c)) {
          gens.push_back(std::move(c));
          K = PermGroup(G.degree(), gens);
          grew = true;
          break;
        }
      }
    }
  }
  return K;
}

PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Perm> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(G, comms);
}

Perm canonical_coset_rep(const StabilizerChain& h_chain, const Perm& x) {
  Perm r = x;
  for (const auto& level : h_chain.levels()) {
    std::size_t best = 0;
    Perm::point best_image = r[level.orbit[0]];
    for (std::size_t at = 1; at < level.orbit.size(); ++at) {
      Perm::point img = r[level.orbit[at]];
      if (img < best_image) {
        best_image = img;
        best = at;
      }
    }
    r = level.transversal[best] * r;
  }
  return r;
}

Homomorphism coset_action(const PermGroup& G, const PermGroup& H,
                          std::uint64_t coset_cap) {
  if (H.degree() != G.degree())
    throw std::invalid_argument("coset_action: degree mismatch");
  for (const Perm& h : H.generators()) {
    if (!G.contains(h))
      throw std::invalid_argument("coset_action: H is not a subgroup of G");
  }
  BigUint index_big = G.order() / H.order();
  std::uint64_t cap = std::min<std::uint64_t>(coset_cap, 0xffffffffu);
  if (!index_big.fits_u64() || index_big.to_u64() > cap)
    throw cap_exceeded("coset_cap", cap);
  std::size_t index = static_cast<std::size_t>(index_big.to_u64());

  const StabilizerChain& hc = H.chain();

  std::vector<Perm> reps;
  std::unordered_map<Perm, Perm::point, PermHash> rep_index;
  reps.push_back(canonical_coset_rep(hc, Perm::identity(G.degree())));
  rep_index.emplace(reps[0], 0);

  const auto& gens = G.generators();
  std::vector<std::vector<Perm::point>> action(gens.size());

  for (std::size_t at = 0; at < reps.size(); ++at) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm moved = canonical_coset_rep(hc, reps[at] * gens[k]);
      auto it = rep_index.find(moved);
      Perm::point target;
      if (it == rep_index.end()) {
        target = static_cast<Perm::point>(reps.size());
        rep_index.emplace(moved, target);
        reps.push_back(std::move(moved));
      } else {
        target = it->second;
      }
      action[k].resize(index, 0);
      action[k][at] = target;
    }
  }
  if (reps.size() != index)
    throw std::logic_error("coset_action: traversal did not reach every coset");

  std::vector<Perm> image_gens;
  image_gens.reserve(gens.size());
  for (auto& img : action) image_gens.emplace_back(std::move(img));

  PermGroup image(static_cast<Perm::point>(index), image_gens);
  return Homomorphism{G, std::move(image), std::move(image_gens)};
}

PermGroup quotient(const PermGroup& G, const PermGroup& N,
                   std::uint64_t coset_cap) {
  if (N.degree() != G.degree())
    throw std::invalid_argument("quotient: degree mismatch");
  for (const Perm& n : N.generators()) {
    if (!G.contains(n))
      throw std::invalid_argument("quotient: N is not a subgroup of G");
    for (const Perm& g : G.generators()) {
      if (!N.contains(n.conjugated_by(g)))
        throw std::invalid_argument("quotient: N is not normal in G");
    }
  }
  if (N.order().is_one()) return G;  // identity quotient, same group

  Homomorphism hom = coset_action(G, N, coset_cap);
  if (hom.image.order() * N.order() != G.order())
    throw std::logic_error("quotient: image order != |G|/|N|");
  return hom.image;
}

namespace {

std::vector<Perm> greedy_generators(const SmallGroupTable& table,
                                    const SmallGroupTable::Sub& H) {
  std::vector<Perm> gens;
  SmallGroupTable::Sub cur = table.trivial_subgroup();
  for (auto e : H.elems) {
    if (!cur.test(e)) {
      gens.push_back(table.elements()[e]);
      cur = table.join(cur, e);
    }
  }
  return gens;
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& G, std::uint64_t lattice_cap) {
  BigUint n = G.order();
  if (!n.fits_u64() || n.to_u64() > lattice_cap)
    throw cap_exceeded("lattice_cap", lattice_cap);

  SmallGroupTable table(G, lattice_cap);

  using Sub = SmallGroupTable::Sub;
  std::set<std::vector<SmallGroupTable::idx>> seen;
  std::vector<Sub> subs;

  auto add = [&](Sub s) -> bool {
    if (seen.insert(s.elems).second) {
      subs.push_back(std::move(s));
      return true;
    }
    return false;
  };

  add(table.trivial_subgroup());
  for (std::uint32_t x = 0; x < table.size(); ++x)
    add(table.cyclic_subgroup(static_cast<SmallGroupTable::idx>(x)));

  // pairwise-join closure
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (table.subset(subs[j], subs[i]) || table.subset(subs[i], subs[j]))
        continue;
      Sub joined = subs[i];
      for (auto g : subs[j].gens)
        if (!joined.test(g)) joined = table.join(joined, g);
      add(std::move(joined));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });

  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (const Sub& s : subs)
    out.emplace_back(G.degree(), greedy_generators(table, s));
  return out;
}

std::vector<PermGroup> maximal_subgroups(const PermGroup& G,
                                         std::uint64_t lattice_cap) {
  std::vector<PermGroup> subs = all_subgroups(G, lattice_cap);
  BigUint n = G.order();

  // element sets, smallest first (all_subgroups returns them sorted by size)
  std::vector<std::vector<Perm>> elem_sets;
  std::vector<BigUint> orders;
  for (const auto& H : subs) {
    auto els = H.elements(lattice_cap);
    std::sort(els.begin(), els.end());
    elem_sets.push_back(std::move(els));
    orders.push_back(H.order());
  }

  auto contains_all = [](const std::vector<Perm>& big, const std::vector<Perm>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (orders[i] == n) continue;  // not proper
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (j == i || orders[j] == n) continue;
      if (orders[j] > orders[i] && contains_all(elem_sets[j], elem_sets[i]))
        maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

}  // namespace cgt
