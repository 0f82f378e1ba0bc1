// Regenerates data/corpus.json, the bundled catalog. Expected values come
// from closed-form arithmetic per family, independent of the verification
// pipeline that later recomputes them.

#include <fstream>
#include <iostream>
#include <numeric>
#include <vector>

#include "cgt/catalog.hpp"
#include "cgt/constructions.hpp"

using cgt::BigUint;
using cgt::CatalogEntry;
using cgt::PermGroup;

namespace {

std::vector<CatalogEntry> entries;

void add(const std::string& name, const PermGroup& G,
         std::map<std::string, BigUint> expect) {
  CatalogEntry e;
  e.name = name;
  e.degree = G.degree();
  for (const cgt::Perm& g : G.generators())
    e.generators.push_back(cgt::format_cycles(g));
  if (auto it = expect.find("order"); it != expect.end()) {
    if (G.order() != it->second) {
      std::cerr << name << ": constructed order " << G.order()
                << " != expected " << it->second << "\n";
      std::exit(1);
    }
  }
  e.expect = std::move(expect);
  entries.push_back(std::move(e));
}

std::uint64_t lcm_1_to(std::uint64_t n) {
  std::uint64_t acc = 1;
  for (std::uint64_t k = 2; k <= n; ++k) acc = std::lcm(acc, k);
  return acc;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t acc = 1;
  for (std::uint64_t k = 2; k <= n; ++k) acc *= k;
  return acc;
}

BigUint pow_big(std::uint64_t base, std::uint64_t exp) {
  return BigUint::pow(BigUint{base}, exp);
}

}  // namespace

int main(int argc, char** argv) {
  add("trivial", PermGroup::trivial(1),
      {{"order", 1}, {"exponent", 1}, {"E", 1}, {"d", 0}});

  for (std::uint64_t n = 2; n <= 30; ++n) {
    add("C" + std::to_string(n), cgt::cyclic_group(n),
        {{"order", n}, {"exponent", n}, {"E", 1}, {"d", 1}});
  }

  const std::vector<std::pair<std::uint64_t, std::uint64_t>> elem_ab = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  for (auto [p, k] : elem_ab) {
    add("(C" + std::to_string(p) + ")^" + std::to_string(k),
        cgt::elementary_abelian_group(p, k),
        {{"order", pow_big(p, k)},
         {"exponent", p},
         {"E", pow_big(p, k - 1)},
         {"d", k}});
  }

  for (std::uint64_t n = 3; n <= 20; ++n) {
    std::uint64_t exp = std::lcm<std::uint64_t>(2, n);
    add("D" + std::to_string(2 * n), cgt::dihedral_group(n),
        {{"order", 2 * n}, {"exponent", exp}, {"E", 2 * n / exp}, {"d", 2}});
  }

  // symmetric 3..6, plus S7 and S8 as enumeration stress
  for (std::uint64_t n = 3; n <= 8; ++n) {
    std::uint64_t order = factorial(n);
    std::uint64_t exp = lcm_1_to(n);
    add("S" + std::to_string(n), cgt::symmetric_group(n),
        {{"order", order}, {"exponent", exp}, {"E", order / exp}, {"d", 2}});
  }

  // alternating: exponents from the element orders present
  add("A3", cgt::alternating_group(3),
      {{"order", 3}, {"exponent", 3}, {"E", 1}, {"d", 1}});
  add("A4", cgt::alternating_group(4),
      {{"order", 12}, {"exponent", 6}, {"E", 2}, {"d", 2}});
  add("A5", cgt::alternating_group(5),
      {{"order", 60}, {"exponent", 30}, {"E", 2}, {"d", 2}});
  add("A6", cgt::alternating_group(6),
      {{"order", 360}, {"exponent", 60}, {"E", 6}, {"d", 2}});

  add("Q8", cgt::quaternion_group(),
      {{"order", 8}, {"exponent", 4}, {"E", 2}, {"d", 2}});

  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    std::uint64_t order = p * (p * p - 1) / 2;
    add("PSL(2," + std::to_string(p) + ")", cgt::psl2_group(p),
        {{"order", order}, {"exponent", order / 2}, {"E", 2}, {"d", 2}});
  }

  for (std::uint64_t n = 1; n <= 5; ++n) {
    add("PA(3," + std::to_string(n) + ")", cgt::power_auto_group(3, n),
        {{"order", BigUint{2} * pow_big(3, n)},
         {"exponent", 6},
         {"E", pow_big(3, n - 1)},
         {"d", n + 1}});
  }
  for (std::uint64_t n = 1; n <= 3; ++n) {
    add("PA(5," + std::to_string(n) + ")", cgt::power_auto_group(5, n),
        {{"order", BigUint{2} * pow_big(5, n)},
         {"exponent", 10},
         {"E", pow_big(5, n - 1)},
         {"d", n + 1}});
  }

  // assorted direct products; exponent = lcm of factor exponents, no d unless
  // the product is abelian of known rank
  struct Product {
    std::string name;
    PermGroup group;
    std::uint64_t order;
    std::uint64_t exponent;
    std::optional<std::uint64_t> d;
  };
  auto C = cgt::cyclic_group;
  auto E = cgt::elementary_abelian_group;
  auto D = cgt::dihedral_group;
  auto S = cgt::symmetric_group;
  auto A = cgt::alternating_group;
  auto X = [](const PermGroup& a, const PermGroup& b) {
    return cgt::direct_product(a, b);
  };
  const PermGroup Q8 = cgt::quaternion_group();

  std::vector<Product> products;
  products.push_back({"C2xC3", X(C(2), C(3)), 6, 6, 1});
  products.push_back({"C2xC4", X(C(2), C(4)), 8, 4, 2});
  products.push_back({"C4xC4", X(C(4), C(4)), 16, 4, 2});
  products.push_back({"C2xC6", X(C(2), C(6)), 12, 6, 2});
  products.push_back({"C3xC9", X(C(3), C(9)), 27, 9, 2});
  products.push_back({"C6xC10", X(C(6), C(10)), 60, 30, 2});
  products.push_back({"(C2)^2xC9", X(E(2, 2), C(9)), 36, 18, 2});
  products.push_back({"(C2)^3xC3", X(E(2, 3), C(3)), 24, 6, 3});
  products.push_back({"(C3)^2xC4", X(E(3, 2), C(4)), 36, 12, 2});
  products.push_back({"S3xC2", X(S(3), C(2)), 12, 6, std::nullopt});
  products.push_back({"S3xC3", X(S(3), C(3)), 18, 6, std::nullopt});
  products.push_back({"S3xC4", X(S(3), C(4)), 24, 12, std::nullopt});
  products.push_back({"S3xS3", X(S(3), S(3)), 36, 6, std::nullopt});
  products.push_back({"S3xS4", X(S(3), S(4)), 144, 12, std::nullopt});
  products.push_back({"A4xC2", X(A(4), C(2)), 24, 6, std::nullopt});
  products.push_back({"A4xC4", X(A(4), C(4)), 48, 12, std::nullopt});
  products.push_back({"A4xS3", X(A(4), S(3)), 72, 6, std::nullopt});
  products.push_back({"S4xC2", X(S(4), C(2)), 48, 12, std::nullopt});
  products.push_back({"S4xS3", X(S(4), S(3)), 144, 12, std::nullopt});
  products.push_back({"A5xC2", X(A(5), C(2)), 120, 30, std::nullopt});
  products.push_back({"A5xC3", X(A(5), C(3)), 180, 30, std::nullopt});
  products.push_back({"A5xA4", X(A(5), A(4)), 720, 30, std::nullopt});
  products.push_back({"A6xC2", X(A(6), C(2)), 720, 60, std::nullopt});
  products.push_back({"S6xC2", X(S(6), C(2)), 1440, 60, std::nullopt});
  products.push_back({"Q8xC3", X(Q8, C(3)), 24, 12, std::nullopt});
  products.push_back({"Q8xQ8", X(Q8, Q8), 64, 4, std::nullopt});
  products.push_back({"Q8xA4", X(Q8, A(4)), 96, 12, std::nullopt});
  products.push_back({"D8xC3", X(D(4), C(3)), 24, 12, std::nullopt});
  products.push_back({"D10xC3", X(D(5), C(3)), 30, 30, std::nullopt});
  products.push_back({"D12xC3", X(D(6), C(3)), 36, 6, std::nullopt});
  products.push_back({"D14xC5", X(D(7), C(5)), 70, 70, std::nullopt});
  products.push_back({"C4xD10", X(C(4), D(5)), 40, 20, std::nullopt});
  products.push_back({"PSL(2,5)xC2", X(cgt::psl2_group(5), C(2)), 120, 30, std::nullopt});
  products.push_back({"PSL(2,7)xC2", X(cgt::psl2_group(7), C(2)), 336, 84, std::nullopt});
  products.push_back({"PA(3,2)xC2", X(cgt::power_auto_group(3, 2), C(2)), 36, 6, std::nullopt});

  for (const Product& p : products) {
    std::map<std::string, BigUint> expect = {{"order", p.order},
                                             {"exponent", p.exponent},
                                             {"E", p.order / p.exponent}};
    if (p.d) expect.emplace("d", *p.d);
    add(p.name, p.group, std::move(expect));
  }

  std::string json = cgt::catalog_to_json(entries);
  if (argc > 1) {
    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << argv[1] << "\n";
      return 1;
    }
    out << json;
    std::cerr << "wrote " << entries.size() << " entries to " << argv[1] << "\n";
  } else {
    std::cout << json;
  }
  return 0;
}
