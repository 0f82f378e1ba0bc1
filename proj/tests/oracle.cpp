#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace oracle {

using cgt::BigUint;
using cgt::Perm;
using cgt::PermGroup;

std::vector<Perm> closure(Perm::point degree, const std::vector<Perm>& gens) {
  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_set<Perm, cgt::PermHash> seen{elements[0]};
  for (std::size_t at = 0; at < elements.size(); ++at) {
    for (const Perm& g : gens) {
      Perm next = elements[at] * g;
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::uint64_t order(const PermGroup& G) {
  return closure(G.degree(), G.generators()).size();
}

bool contains(const PermGroup& G, const Perm& p) {
  for (const Perm& e : closure(G.degree(), G.generators()))
    if (e == p) return true;
  return false;
}

std::uint64_t exponent(const PermGroup& G) {
  std::uint64_t acc = 1;
  for (const Perm& e : closure(G.degree(), G.generators()))
    acc = std::lcm(acc, e.order());
  return acc;
}

std::uint64_t max_element_order(const PermGroup& G) {
  std::uint64_t best = 1;
  for (const Perm& e : closure(G.degree(), G.generators()))
    best = std::max(best, e.order());
  return best;
}

namespace {

// index arithmetic over the materialized element list
struct DenseGroup {
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::uint32_t, cgt::PermHash> index;
  std::vector<std::uint32_t> table;  // row-major products
  std::uint32_t identity = 0;

  explicit DenseGroup(const PermGroup& G) {
    elements = closure(G.degree(), G.generators());
    std::uint64_t n = elements.size();
    if (n > 4096) throw std::invalid_argument("oracle: group too large");
    for (std::uint32_t i = 0; i < n; ++i) {
      index.emplace(elements[i], i);
      if (elements[i].is_identity()) identity = i;
    }
    table.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        table[a * n + b] = index.at(elements[a] * elements[b]);
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[static_cast<std::size_t>(a) * size() + b];
  }
};

using ElemSet = std::vector<std::uint32_t>;  // sorted element indices

// <S union {x}> by closing the coset graph of S under right multiplication
ElemSet extend(const DenseGroup& dense, const ElemSet& sub,
               const std::vector<std::uint32_t>& gens, std::uint32_t x) {
  std::vector<bool> in(dense.size(), false);
  for (auto e : sub) in[e] = true;

  std::vector<std::uint32_t> all_gens = gens;
  all_gens.push_back(x);

  std::vector<std::uint32_t> reps{x};
  ElemSet out = sub;
  auto mark = [&](std::uint32_t r) {
    for (auto h : sub) {
      std::uint32_t e = dense.mul(h, r);
      if (!in[e]) {
        in[e] = true;
        out.push_back(e);
      }
    }
  };
  mark(x);
  for (std::size_t at = 0; at < reps.size(); ++at) {
    for (auto g : all_gens) {
      std::uint32_t moved = dense.mul(reps[at], g);
      if (!in[moved]) {
        reps.push_back(moved);
        mark(moved);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint32_t min_generators(const PermGroup& G) {
  DenseGroup dense(G);
  std::uint32_t n = dense.size();
  if (n == 1) return 0;

  struct Node {
    ElemSet elems;
    std::vector<std::uint32_t> gens;
  };

  std::set<ElemSet> visited;
  std::vector<Node> frontier;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x == dense.identity) continue;
    ElemSet cyc;
    std::uint32_t cur = dense.identity;
    do {
      cyc.push_back(cur);
      cur = dense.mul(cur, x);
    } while (cur != dense.identity);
    std::sort(cyc.begin(), cyc.end());
    if (cyc.size() == n) return 1;
    if (visited.insert(cyc).second) frontier.push_back({std::move(cyc), {x}});
  }

  // larger subgroups first: generating tuples surface sooner
  auto by_size_desc = [](const Node& a, const Node& b) {
    return a.elems.size() > b.elems.size();
  };

  for (std::uint32_t k = 2; k <= 32; ++k) {
    std::stable_sort(frontier.begin(), frontier.end(), by_size_desc);
    std::vector<Node> next_frontier;
    for (const Node& node : frontier) {
      std::vector<bool> coset_seen(n, false);
      for (auto e : node.elems) coset_seen[e] = true;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (coset_seen[x]) continue;
        for (auto h : node.elems) coset_seen[dense.mul(h, x)] = true;
        ElemSet bigger = extend(dense, node.elems, node.gens, x);
        if (bigger.size() == n) return k;
        if (visited.insert(bigger).second) {
          Node child;
          child.elems = std::move(bigger);
          child.gens = node.gens;
          child.gens.push_back(x);
          next_frontier.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next_frontier);
    if (frontier.empty())
      throw std::logic_error("oracle::min_generators: frontier exhausted");
  }
  throw std::logic_error("oracle::min_generators: unreachable");
}

std::vector<std::vector<Perm>> all_subgroups_by_subsets(const PermGroup& G) {
  std::vector<Perm> elements = closure(G.degree(), G.generators());
  std::size_t n = elements.size();
  if (n > 16) throw std::invalid_argument("oracle: subset enumeration needs order <= 16");

  std::set<std::vector<Perm>> found;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1) gens.push_back(elements[i]);
    std::vector<Perm> sub = closure(G.degree(), gens);
    std::sort(sub.begin(), sub.end());
    found.insert(std::move(sub));
  }
  return {found.begin(), found.end()};
}

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                    BigUint& acc, BigUint& best) {
  if (remaining == 0) {
    if (acc > best) best = acc;
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    BigUint saved = acc;
    acc = BigUint::lcm(acc, BigUint{part});
    partitions_rec(remaining - part, part, acc, best);
    acc = std::move(saved);
  }
}

}  // namespace

BigUint landau_by_partitions(std::uint32_t n) {
  BigUint acc{1};
  BigUint best{1};
  partitions_rec(n, n, acc, best);
  return best;
}

}  // namespace oracle
