#include "cgt/small_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgt {

SmallGroupTable::SmallGroupTable(const PermGroup& G, std::uint64_t cap) {
  std::uint64_t n = G.order_u64(std::min<std::uint64_t>(cap, max_size));
  n_ = static_cast<std::uint32_t>(n);
  mask_words_ = (n_ + 63) / 64;

  elements_ = G.elements(n);
  index_.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    index_.emplace(elements_[i], static_cast<idx>(i));
    if (elements_[i].is_identity()) identity_ = static_cast<idx>(i);
  }

  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      table_[static_cast<std::size_t>(a) * n_ + b] =
          index_.at(elements_[a] * elements_[b]);
    }
  }

  inverse_.resize(n_);
  element_order_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    inverse_[a] = index_.at(elements_[a].inverse());
    element_order_[a] = static_cast<std::uint32_t>(elements_[a].order());
  }
}

SmallGroupTable::idx SmallGroupTable::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("SmallGroupTable: permutation not in group");
  return it->second;
}

SmallGroupTable::Sub SmallGroupTable::trivial_subgroup() const {
  Sub s;
  s.elems = {identity_};
  s.mask.assign(mask_words_, 0);
  set_bit(s.mask, identity_);
  return s;
}

SmallGroupTable::Sub SmallGroupTable::cyclic_subgroup(idx x) const {
  Sub s;
  s.mask.assign(mask_words_, 0);
  idx cur = identity_;
  do {
    s.elems.push_back(cur);
    set_bit(s.mask, cur);
    cur = mul(cur, x);
  } while (cur != identity_);
  if (x != identity_) s.gens.push_back(x);
  std::sort(s.elems.begin(), s.elems.end());
  return s;
}

SmallGroupTable::Sub SmallGroupTable::closure(const std::vector<idx>& gens) const {
  Sub s = trivial_subgroup();
  for (idx g : gens)
    if (!s.test(g)) s = join(s, g);
  return s;
}

SmallGroupTable::Sub SmallGroupTable::join(const Sub& H, idx x) const {
  Sub K;
  K.mask = H.mask;
  K.elems = H.elems;
  K.gens = H.gens;
  K.gens.push_back(x);

  // BFS over right cosets of H: from coset H*r, right multiplication by a
  // generator of <H, x> lands in another coset, and marking a coset costs
  // |H| table lookups.
  std::vector<idx> coset_reps;
  auto mark_coset = [&](idx r) {
    coset_reps.push_back(r);
    for (idx h : H.elems) {
      idx e = mul(h, r);
      if (!K.test(e)) {
        set_bit(K.mask, e);
        K.elems.push_back(e);
      }
    }
  };
  mark_coset(x);
  for (std::size_t at = 0; at < coset_reps.size(); ++at) {
    idx r = coset_reps[at];
    for (idx g : K.gens) {
      idx moved = mul(r, g);
      if (!K.test(moved)) mark_coset(moved);
    }
  }
  std::sort(K.elems.begin(), K.elems.end());
  return K;
}

bool SmallGroupTable::subset(const Sub& A, const Sub& B) const {
  for (std::size_t w = 0; w < mask_words_; ++w)
    if ((A.mask[w] & ~B.mask[w]) != 0) return false;
  return true;
}

}  // namespace cgt
