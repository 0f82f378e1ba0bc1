#ifndef CGT_PERM_HPP
#define CGT_PERM_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

// Thrown when text does not match the cycle grammar or names a bad point.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A permutation of {1..degree}, stored as a 0-based image table.
// Points are 1-based in every public text format; the 0-based storage is an
// internal detail and never appears in I/O.
//
// Composition convention, fixed project-wide: (p * q)(x) = q(p(x)), i.e. the
// LEFT factor acts first.
class Perm {
public:
  using point = std::uint32_t;

  static Perm identity(point degree);

  // images[i] is the 0-based image of point i; must be a bijection
  explicit Perm(std::vector<point> images);

  point degree() const { return static_cast<point>(images_.size()); }
  point operator[](point x) const { return images_[x]; }
  std::span<const point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // least m >= 1 with p^m = id: lcm of cycle lengths
  std::uint64_t order() const;

  // +1 for even, -1 for odd
  int sign() const;

  std::optional<point> smallest_moved_point() const;

  Perm pow(std::uint64_t n) const;

  friend Perm operator*(const Perm& p, const Perm& q);
  Perm& operator*=(const Perm& q) { return *this = *this * q; }

  // q^-1 * p * q
  Perm conjugated_by(const Perm& q) const;

  friend bool operator==(const Perm& p, const Perm& q) { return p.images_ == q.images_; }
  friend bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }
  friend bool operator<(const Perm& p, const Perm& q) { return p.images_ < q.images_; }

  std::size_t hash() const;

private:
  std::vector<point> images_;
};

// Cycle grammar (exact): perm := "()" | cycle+ ; cycle := "(" int (" " int)* ")"
// ASCII digits, single spaces, no signs, points 1..degree, no leading zeros.
Perm parse_cycles(const std::string& text, Perm::point degree);

// Disjoint cycles sorted by smallest moved point, each cycle starting at its
// smallest point, fixed points omitted, identity printed as "()".
std::string format_cycles(const Perm& p);

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace cgt

#endif
