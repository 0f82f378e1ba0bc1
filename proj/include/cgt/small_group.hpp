#ifndef CGT_SMALL_GROUP_HPP
#define CGT_SMALL_GROUP_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

// Dense machinery for groups small enough to materialize completely: the
// element list, the full multiplication table, and subgroups as element-index
// sets. This is what makes exhaustive generator-count searches and subgroup
// lattices affordable; it holds index arithmetic only and never touches the
// stabilizer chain once the table is built.
class SmallGroupTable {
public:
  using idx = std::uint16_t;
  static constexpr std::uint64_t max_size = 65535;

  SmallGroupTable(const PermGroup& G, std::uint64_t cap);

  std::uint32_t size() const { return n_; }
  const std::vector<Perm>& elements() const { return elements_; }
  idx identity() const { return identity_; }
  idx mul(idx a, idx b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  idx inverse(idx a) const { return inverse_[a]; }
  std::uint32_t order_of(idx a) const { return element_order_[a]; }
  idx index_of(const Perm& p) const;

  // A subgroup as a sorted element-index list plus a membership bitmask and
  // the generator indices it was built from.
  struct Sub {
    std::vector<idx> elems;          // sorted ascending
    std::vector<std::uint64_t> mask;
    std::vector<idx> gens;

    std::uint32_t order() const { return static_cast<std::uint32_t>(elems.size()); }
    bool test(idx e) const { return (mask[e >> 6] >> (e & 63)) & 1u; }
  };

  Sub trivial_subgroup() const;
  Sub cyclic_subgroup(idx x) const;
  Sub closure(const std::vector<idx>& gens) const;

  // <H, x> by breadth-first search over right cosets of H; costs O(|result|)
  // table lookups. Depends only on the coset H*x, not on x itself.
  Sub join(const Sub& H, idx x) const;

  bool subset(const Sub& A, const Sub& B) const;

private:
  void set_bit(std::vector<std::uint64_t>& mask, idx e) const {
    mask[e >> 6] |= (std::uint64_t{1} << (e & 63));
  }

  std::uint32_t n_ = 0;
  std::size_t mask_words_ = 0;
  idx identity_ = 0;
  std::vector<Perm> elements_;
  std::vector<idx> table_;
  std::vector<idx> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::unordered_map<Perm, idx, PermHash> index_;
};

}  // namespace cgt

#endif
