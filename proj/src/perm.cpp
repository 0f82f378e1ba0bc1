#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace cgt {

Perm Perm::identity(point degree) {
  std::vector<point> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Perm(std::move(img));
}

Perm::Perm(std::vector<point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<point> inv(images_.size());
  for (point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Perm::sign() const {
  // parity of (degree - number of cycles)
  std::vector<bool> seen(images_.size(), false);
  point cycles = 0;
  for (point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (point x = start; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return ((degree() - cycles) % 2 == 0) ? 1 : -1;
}

std::optional<Perm::point> Perm::smallest_moved_point() const {
  for (point i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return std::nullopt;
}

Perm Perm::pow(std::uint64_t n) const {
  Perm result = identity(degree());
  Perm acc = *this;
  while (n != 0) {
    if (n & 1) result *= acc;
    n >>= 1;
    if (n != 0) acc *= acc;
  }
  return result;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<Perm::point> img(p.degree());
  for (Perm::point i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& q) const {
  return q.inverse() * (*this) * q;
}

std::size_t Perm::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ images_.size();
  for (point v : images_) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// strict decimal int: no sign, no leading zero (except the single digit 0,
// which is then rejected as out of range)
Perm::point read_int(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) throw parse_error("expected a point number", start);
  if (text[start] == '0')
    throw parse_error("point numbers may not have leading zeros", start);
  if (pos - start > 9) throw parse_error("point number too large", start);
  std::uint64_t v = 0;
  for (std::size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
  return static_cast<Perm::point>(v);
}

}  // namespace

Perm parse_cycles(const std::string& text, Perm::point degree) {
  if (text == "()") return Perm::identity(degree);
  if (text.empty()) throw parse_error("empty permutation text", 0);

  std::vector<Perm::point> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '('", pos);
    ++pos;
    std::vector<Perm::point> cycle;
    while (true) {
      std::size_t at = pos;
      Perm::point v = read_int(text, pos);
      if (v < 1 || v > degree)
        throw parse_error("point " + std::to_string(v) + " out of range 1.." +
                              std::to_string(degree),
                          at);
      if (used[v - 1])
        throw parse_error("point " + std::to_string(v) + " appears twice", at);
      used[v - 1] = true;
      cycle.push_back(v - 1);
      if (pos < text.size() && text[pos] == ' ') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ')')
      throw parse_error("expected ')'", pos);
    ++pos;
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  if (!any_cycle) throw parse_error("expected at least one cycle", 0);
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Perm::point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    bool first = true;
    for (Perm::point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << format_cycles(p);
}

}  // namespace cgt
