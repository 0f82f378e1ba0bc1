#include "cgt/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cgt {

namespace {

Perm::point smallest_moved_over(const std::vector<Perm>& gens) {
  Perm::point best = 0;
  bool found = false;
  for (const Perm& g : gens) {
    auto m = g.smallest_moved_point();
    if (m && (!found || *m < best)) {
      best = *m;
      found = true;
    }
  }
  assert(found);
  return best;
}

}  // namespace

StabilizerChain StabilizerChain::build(Perm::point degree,
                                       const std::vector<Perm>& generators) {
  StabilizerChain chain(degree);

  std::vector<Perm> nonid;
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    if (!g.is_identity()) nonid.push_back(g);
  }
  if (nonid.empty()) return chain;

  Level first;
  first.base_point = smallest_moved_over(nonid);
  first.gens = std::move(nonid);
  chain.levels_.push_back(std::move(first));
  chain.rebuild_orbit(0);

  // Verify levels deepest-first. A failing residue fixes every base point
  // above its stuck level, so it is inserted as a strong generator at every
  // level in between: that keeps the generator sets nested (each level's
  // generators lie in the previous level's group), which the orbit-product
  // order formula relies on. The stuck level's orbit strictly grows on each
  // insertion, so the loop terminates.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    Perm residue = Perm::identity(degree);
    std::size_t stuck = 0;
    if (chain.close_level(static_cast<std::size_t>(i), &residue, &stuck)) {
      --i;
      continue;
    }
    if (stuck == chain.levels_.size()) {
      Level lvl;
      lvl.base_point = *residue.smallest_moved_point();
      chain.levels_.push_back(std::move(lvl));
    }
    for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stuck; ++l) {
      chain.levels_[l].gens.push_back(residue);
      chain.rebuild_orbit(l);
    }
    i = static_cast<std::ptrdiff_t>(stuck);
  }
  return chain;
}

void StabilizerChain::rebuild_orbit(std::size_t lvl) {
  Level& L = levels_[lvl];
  L.orbit.clear();
  L.transversal.clear();
  L.position.assign(degree_, -1);

  L.orbit.push_back(L.base_point);
  L.position[L.base_point] = 0;
  L.transversal.push_back(Perm::identity(degree_));

  for (std::size_t at = 0; at < L.orbit.size(); ++at) {
    Perm::point x = L.orbit[at];
    for (const Perm& s : L.gens) {
      Perm::point y = s[x];
      if (L.position[y] < 0) {
        L.position[y] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(y);
        L.transversal.push_back(L.transversal[at] * s);
      }
    }
  }
}

// Checks every Schreier generator of level lvl. Returns true if all sift to
// the identity; otherwise stores the first failing residue and stuck level.
bool StabilizerChain::close_level(std::size_t lvl, Perm* residue,
                                  std::size_t* stuck_level) const {
  const Level& L = levels_[lvl];
  for (std::size_t at = 0; at < L.orbit.size(); ++at) {
    for (const Perm& s : L.gens) {
      Perm::point image = s[L.orbit[at]];
      const Perm& back = L.transversal[static_cast<std::size_t>(L.position[image])];
      Perm u = L.transversal[at] * s * back.inverse();
      if (u.is_identity()) continue;
      auto [r, j] = sift(u, lvl + 1);
      if (!r.is_identity()) {
        *residue = std::move(r);
        *stuck_level = j;
        return false;
      }
    }
  }
  return true;
}

BigUint StabilizerChain::order() const {
  BigUint n{1};
  for (const Level& L : levels_) n *= BigUint{L.orbit.size()};
  return n;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& p,
                                                   std::size_t from) const {
  Perm g = p;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    Perm::point image = g[L.base_point];
    if (L.position[image] < 0) return {std::move(g), i};
    g *= L.transversal[static_cast<std::size_t>(L.position[image])].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("StabilizerChain: degree mismatch");
  auto [r, lvl] = sift(p);
  (void)lvl;
  return r.is_identity();
}

void StabilizerChain::for_each_element(
    const std::function<void(const Perm&)>& fn) const {
  if (levels_.empty()) {
    fn(Perm::identity(degree_));
    return;
  }
  // element = t(deepest) * ... * t(level 1) * t(level 0)
  std::function<void(std::size_t, const Perm&)> rec =
      [&](std::size_t lvl, const Perm& acc) {
        const Level& L = levels_[lvl];
        for (std::size_t at = 0; at < L.orbit.size(); ++at) {
          Perm next = acc * L.transversal[at];
          if (lvl == 0) {
            fn(next);
          } else {
            rec(lvl - 1, next);
          }
        }
      };
  rec(levels_.size() - 1, Perm::identity(degree_));
}

bool StabilizerChain::verify() const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    for (const Perm& s : L.gens) {
      for (std::size_t k = 0; k < i; ++k) {
        if (s[levels_[k].base_point] != levels_[k].base_point) return false;
      }
    }
    for (std::size_t at = 0; at < L.orbit.size(); ++at) {
      for (const Perm& s : L.gens) {
        Perm::point image = s[L.orbit[at]];
        if (L.position[image] < 0) return false;
        Perm u = L.transversal[at] * s *
                 L.transversal[static_cast<std::size_t>(L.position[image])].inverse();
        if (!contains(u)) return false;
      }
    }
  }
  return true;
}

PermGroup::PermGroup(Perm::point degree, std::vector<Perm> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      slot_(std::make_shared<ChainSlot>()) {
  if (degree_ == 0) throw std::invalid_argument("PermGroup: degree must be positive");
  for (const Perm& g : generators_) {
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(slot_->once, [this] {
    slot_->chain = std::make_shared<const StabilizerChain>(
        StabilizerChain::build(degree_, generators_));
  });
  return *slot_->chain;
}

BigUint PermGroup::order() const { return chain().order(); }

std::uint64_t PermGroup::order_u64(std::uint64_t cap) const {
  BigUint n = order();
  if (!n.fits_u64() || n.to_u64() > cap)
    throw cap_exceeded("enumeration_cap", cap);
  return n.to_u64();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("PermGroup: degree mismatch in membership test");
  return chain().contains(p);
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                 std::uint64_t cap) const {
  order_u64(cap);  // throws if enumeration would exceed the cap
  chain().for_each_element(fn);
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_u64(cap)));
  chain().for_each_element([&](const Perm& p) { out.push_back(p); });
  return out;
}

}  // namespace cgt
