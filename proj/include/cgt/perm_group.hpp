#ifndef CGT_PERM_GROUP_HPP
#define CGT_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"

namespace cgt {

// Raised when an operation would exceed one of the configured caps.
class cap_exceeded : public std::runtime_error {
public:
  cap_exceeded(const std::string& which, std::uint64_t limit)
      : std::runtime_error("cap exceeded: " + which + " (limit " +
                           std::to_string(limit) + ")"),
        which_(which),
        limit_(limit) {}
  const std::string& which() const { return which_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::string which_;
  std::uint64_t limit_;
};

// Work limits. These are configuration, not constants; defaults are sized so
// the bundled corpus verifies in minutes.
struct Caps {
  std::uint64_t enumeration_cap = 200000;  // max order for element streaming
  std::uint64_t coset_cap = 20000;         // max index for coset actions
  std::uint64_t lattice_cap = 100;         // max order for full subgroup lattices
};

// Base, strong generators and explicit transversals for a permutation group.
// Built deterministically: base points are chosen as the smallest point moved
// by the residue that created the level, and orbits are explored in BFS order
// with generators in insertion order, so transversals are reproducible.
class StabilizerChain {
public:
  struct Level {
    Perm::point base_point;
    std::vector<Perm> gens;  // strong generators fixing all earlier base points
    std::vector<Perm::point> orbit;           // discovery order, orbit[0] == base_point
    std::vector<std::int32_t> position;       // point -> index in orbit, -1 if absent
    std::vector<Perm> transversal;            // transversal[i] maps base_point to orbit[i]
  };

  // Schreier-Sims closure of the given generators; the result is verified
  // (every Schreier generator sifts to the identity).
  static StabilizerChain build(Perm::point degree, const std::vector<Perm>& generators);

  Perm::point degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  bool empty() const { return levels_.empty(); }

  BigUint order() const;

  // Sifts p through the chain starting at `from`. Returns the residue and the
  // level at which sifting stopped (levels_.size() if it ran off the end).
  std::pair<Perm, std::size_t> sift(const Perm& p, std::size_t from = 0) const;

  bool contains(const Perm& p) const;

  // Visits every element exactly once, as products of transversal
  // representatives, deepest level first. Deterministic order.
  void for_each_element(const std::function<void(const Perm&)>& fn) const;

  // True if every Schreier generator of every level sifts to the identity.
  bool verify() const;

private:
  explicit StabilizerChain(Perm::point degree) : degree_(degree) {}

  void rebuild_orbit(std::size_t lvl);
  bool close_level(std::size_t lvl, Perm* residue, std::size_t* stuck_level) const;

  Perm::point degree_ = 0;
  std::vector<Level> levels_;
};

// A finite permutation group given by generators on {1..degree}. Value type;
// the stabilizer chain is memoized behind a shared slot, so copies share the
// chain and concurrent first computations are serialized per group.
class PermGroup {
public:
  explicit PermGroup(Perm::point degree, std::vector<Perm> generators = {});

  static PermGroup trivial(Perm::point degree) { return PermGroup(degree); }

  Perm::point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const StabilizerChain& chain() const;

  BigUint order() const;

  // order() when it fits, otherwise throws cap_exceeded("enumeration_cap")
  std::uint64_t order_u64(std::uint64_t cap) const;

  bool contains(const Perm& p) const;

  bool is_trivial() const { return order().is_one(); }

  // Streams each element exactly once; requires order <= cap.
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t cap) const;

  // Materialized element list in stream order; requires order <= cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

private:
  struct ChainSlot {
    std::once_flag once;
    std::shared_ptr<const StabilizerChain> chain;
  };

  Perm::point degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<ChainSlot> slot_;
};

}  // namespace cgt

#endif
