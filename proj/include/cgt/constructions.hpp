#ifndef CGT_CONSTRUCTIONS_HPP
#define CGT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

enum class Family {
  cyclic,
  elementary_abelian,
  dihedral,
  symmetric,
  alternating,
  quaternion8,
  psl2,
  power_auto,
  direct_product,
};

// A named group family with integer parameters; direct products carry their
// factors as nested specs.
struct FamilySpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<FamilySpec> factors;

  // "cyclic(6)", "psl2(7)", "quaternion8",
  // "direct_product(symmetric(3),cyclic(2))"
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Permutation realization of a family. Orders and defining relations are
// asserted at construction. Throws std::invalid_argument on bad parameters.
PermGroup build(const FamilySpec& spec);

PermGroup cyclic_group(std::uint64_t n);
PermGroup elementary_abelian_group(std::uint64_t p, std::uint64_t k);
PermGroup dihedral_group(std::uint64_t n);  // symmetries of the n-gon, order 2n
PermGroup symmetric_group(std::uint64_t n);
PermGroup alternating_group(std::uint64_t n);
PermGroup quaternion_group();  // regular representation on 8 points

// Action on the projective line over F_p: x -> x+1 and x -> -1/x, degree p+1
// with infinity encoded as point p+1. Order is asserted to be p(p^2-1)/2.
PermGroup psl2_group(std::uint64_t p);

// (C_q)^n with an involution inverting every q-cycle blockwise, degree q*n.
// The relations t a_i t = a_i^-1 are asserted.
PermGroup power_auto_group(std::uint64_t q, std::uint64_t n);

PermGroup direct_product(const PermGroup& G, const PermGroup& H);

}  // namespace cgt

#endif
