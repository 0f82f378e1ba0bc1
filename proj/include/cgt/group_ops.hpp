#ifndef CGT_GROUP_OPS_HPP
#define CGT_GROUP_OPS_HPP

#include <cstdint>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

// A homomorphism described by where the source generators go.
struct Homomorphism {
  PermGroup source;
  PermGroup image;
  std::vector<Perm> generator_images;  // aligned with source.generators()

  // Multiplies generator images along a word of generator indices.
  Perm apply_word(const std::vector<std::size_t>& word) const;

  // Draws random generator words and checks that words with equal source
  // products have equal image products (well-definedness spot check).
  bool spot_check(std::size_t word_count, std::uint64_t seed) const;
};

// The group generated by gens inside the ambient degree of G. Containment in
// G is the caller's concern; degrees must match.
PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens);

// Smallest subgroup containing seed that is closed under conjugation by G's
// generators (fixed-point iteration).
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

// Normal closure of the commutators of all generator pairs.
PermGroup derived_subgroup(const PermGroup& G);

// g^-1 * a * b over generator pairs: [a, b] = a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

// The canonical (lexicographically minimal base-image) element of the right
// coset H*x, computed by walking H's stabilizer chain. Two permutations lie
// in the same right coset of H iff their canonical representatives are equal.
Perm canonical_coset_rep(const StabilizerChain& h_chain, const Perm& x);

// Action of G on the right cosets of H <= G, as a homomorphism onto a group
// of degree [G:H]. Throws cap_exceeded("coset_cap") if the index exceeds the
// cap and std::invalid_argument if H is not a subgroup of G.
Homomorphism coset_action(const PermGroup& G, const PermGroup& H,
                          std::uint64_t coset_cap);

// G/N as the image of the coset action on N. Requires N normal in G
// (verified by conjugating N's generators by G's generators). The image
// order is checked against |G|/|N|. For trivial N the group G itself is
// returned, bypassing the degree-|G| regular action.
PermGroup quotient(const PermGroup& G, const PermGroup& N,
                   std::uint64_t coset_cap);

// The complete subgroup lattice, as the pairwise-join closure of all cyclic
// subgroups, deduplicated by element sets. Requires |G| <= lattice_cap.
std::vector<PermGroup> all_subgroups(const PermGroup& G, std::uint64_t lattice_cap);

// Proper subgroups maximal under inclusion.
std::vector<PermGroup> maximal_subgroups(const PermGroup& G,
                                         std::uint64_t lattice_cap);

}  // namespace cgt

#endif
