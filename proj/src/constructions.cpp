#include "cgt/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cgt/numutil.hpp"

namespace cgt {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Perm cycle_on(Perm::point degree, Perm::point first, Perm::point length) {
  std::vector<Perm::point> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (Perm::point i = 0; i < length; ++i)
    img[first + i] = first + (i + 1) % length;
  return Perm(std::move(img));
}

}  // namespace

PermGroup cyclic_group(std::uint64_t n) {
  require(n >= 1, "cyclic: n must be >= 1");
  Perm::point deg = static_cast<Perm::point>(n);
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(deg, {cycle_on(deg, 0, deg)});
}

PermGroup elementary_abelian_group(std::uint64_t p, std::uint64_t k) {
  require(is_prime_u64(p), "elementary_abelian: p must be prime");
  require(k >= 1, "elementary_abelian: k must be >= 1");
  Perm::point deg = static_cast<Perm::point>(p * k);
  std::vector<Perm> gens;
  for (std::uint64_t i = 0; i < k; ++i)
    gens.push_back(cycle_on(deg, static_cast<Perm::point>(i * p),
                            static_cast<Perm::point>(p)));
  return PermGroup(deg, std::move(gens));
}

PermGroup dihedral_group(std::uint64_t n) {
  require(n >= 3, "dihedral: n must be >= 3");
  Perm::point deg = static_cast<Perm::point>(n);
  std::vector<Perm::point> reflect(deg);
  for (Perm::point i = 0; i < deg; ++i) reflect[i] = (deg - i) % deg;
  return PermGroup(deg, {cycle_on(deg, 0, deg), Perm(std::move(reflect))});
}

PermGroup symmetric_group(std::uint64_t n) {
  require(n >= 1, "symmetric: n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  Perm::point deg = static_cast<Perm::point>(n);
  std::vector<Perm::point> swap01(deg);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return PermGroup(deg, {Perm(std::move(swap01))});
  return PermGroup(deg, {Perm(std::move(swap01)), cycle_on(deg, 0, deg)});
}

PermGroup alternating_group(std::uint64_t n) {
  require(n >= 3, "alternating: n must be >= 3");
  Perm::point deg = static_cast<Perm::point>(n);
  std::vector<Perm::point> three(deg);
  std::iota(three.begin(), three.end(), 0u);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return PermGroup(deg, {Perm(std::move(three))});
  Perm big = (n % 2 == 1) ? cycle_on(deg, 0, deg)
                          : cycle_on(deg, 1, static_cast<Perm::point>(n - 1));
  return PermGroup(deg, {Perm(std::move(three)), std::move(big)});
}

PermGroup quaternion_group() {
  // points 1..8 = e, i, j, k, -e, -i, -j, -k; right multiplication by i and j
  //   x * i : [2 5 8 3 6 1 4 7]
  //   x * j : [3 4 5 6 7 8 1 2]
  auto from_1based = [](std::vector<Perm::point> v) {
    for (auto& x : v) --x;
    return Perm(std::move(v));
  };
  Perm mul_i = from_1based({2, 5, 8, 3, 6, 1, 4, 7});
  Perm mul_j = from_1based({3, 4, 5, 6, 7, 8, 1, 2});
  return PermGroup(8, {std::move(mul_i), std::move(mul_j)});
}

PermGroup psl2_group(std::uint64_t p) {
  require(is_prime_u64(p) && p % 2 == 1, "psl2: p must be an odd prime");
  Perm::point deg = static_cast<Perm::point>(p + 1);  // field points + infinity
  const Perm::point inf = static_cast<Perm::point>(p);

  std::vector<Perm::point> shift(deg);
  for (std::uint64_t x = 0; x < p; ++x)
    shift[x] = static_cast<Perm::point>((x + 1) % p);
  shift[inf] = inf;

  auto inverse_mod = [&](std::uint64_t x) {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e != 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<Perm::point> neg_inv(deg);
  neg_inv[0] = inf;
  neg_inv[inf] = 0;
  for (std::uint64_t x = 1; x < p; ++x)
    neg_inv[x] = static_cast<Perm::point>((p - inverse_mod(x)) % p);

  PermGroup G(deg, {Perm(std::move(shift)), Perm(std::move(neg_inv))});
  BigUint expected = BigUint{p} * BigUint{p * p - 1} / BigUint{2};
  if (G.order() != expected)
    throw std::logic_error("psl2: order mismatch for p = " + std::to_string(p));
  return G;
}

PermGroup power_auto_group(std::uint64_t q, std::uint64_t n) {
  require(is_prime_u64(q) && q % 2 == 1, "power_auto: q must be an odd prime");
  require(n >= 1, "power_auto: n must be >= 1");
  Perm::point deg = static_cast<Perm::point>(q * n);

  std::vector<Perm> gens;
  for (std::uint64_t i = 0; i < n; ++i)
    gens.push_back(cycle_on(deg, static_cast<Perm::point>(i * q),
                            static_cast<Perm::point>(q)));

  // blockwise inversion: within each block, m -> -m (mod q)
  std::vector<Perm::point> inv(deg);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t m = 0; m < q; ++m)
      inv[i * q + m] = static_cast<Perm::point>(i * q + (q - m) % q);
  Perm t(std::move(inv));

  for (const Perm& a : gens) {
    if (t * a * t != a.inverse())
      throw std::logic_error("power_auto: inversion relation failed");
  }
  gens.push_back(std::move(t));

  PermGroup G(deg, std::move(gens));
  BigUint expected = BigUint{2} * BigUint::pow(BigUint{q}, n);
  if (G.order() != expected)
    throw std::logic_error("power_auto: order mismatch");
  return G;
}

PermGroup direct_product(const PermGroup& G, const PermGroup& H) {
  Perm::point deg = G.degree() + H.degree();
  std::vector<Perm> gens;
  for (const Perm& g : G.generators()) {
    std::vector<Perm::point> img(deg);
    for (Perm::point i = 0; i < G.degree(); ++i) img[i] = g[i];
    for (Perm::point i = G.degree(); i < deg; ++i) img[i] = i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& h : H.generators()) {
    std::vector<Perm::point> img(deg);
    for (Perm::point i = 0; i < G.degree(); ++i) img[i] = i;
    for (Perm::point i = 0; i < H.degree(); ++i) img[G.degree() + i] = G.degree() + h[i];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(deg, std::move(gens));
}

namespace {

const std::vector<std::pair<std::string, Family>> kFamilyNames = {
    {"cyclic", Family::cyclic},
    {"elementary_abelian", Family::elementary_abelian},
    {"dihedral", Family::dihedral},
    {"symmetric", Family::symmetric},
    {"alternating", Family::alternating},
    {"quaternion8", Family::quaternion8},
    {"psl2", Family::psl2},
    {"power_auto", Family::power_auto},
    {"direct_product", Family::direct_product},
};

std::string family_name(Family f) {
  for (const auto& [name, fam] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

FamilySpec parse_spec(const std::string& text, std::size_t& pos);

std::uint64_t parse_number(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start)
    throw std::invalid_argument("family spec: expected a number at position " +
                                std::to_string(start));
  return std::stoull(text.substr(start, pos - start));
}

FamilySpec parse_spec(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
    ++pos;
  std::string name = text.substr(start, pos - start);

  FamilySpec spec;
  bool known = false;
  for (const auto& [fname, fam] : kFamilyNames) {
    if (fname == name) {
      spec.family = fam;
      known = true;
      break;
    }
  }
  if (!known)
    throw std::invalid_argument("family spec: unknown family \"" + name + "\"");

  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    while (true) {
      if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        spec.params.push_back(parse_number(text, pos));
      } else {
        spec.factors.push_back(parse_spec(text, pos));
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("family spec: expected ')'");
    ++pos;
  }
  return spec;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  std::size_t pos = 0;
  FamilySpec spec = parse_spec(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("family spec: trailing input in \"" + text + "\"");
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family_name(family);
  if (params.empty() && factors.empty()) return out;
  out += '(';
  bool first = true;
  for (std::uint64_t v : params) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  for (const FamilySpec& f : factors) {
    if (!first) out += ',';
    out += f.to_string();
    first = false;
  }
  out += ')';
  return out;
}

PermGroup build(const FamilySpec& spec) {
  auto want_params = [&](std::size_t n) {
    require(spec.params.size() == n && spec.factors.empty(),
            family_name(spec.family) + ": expected " + std::to_string(n) +
                " integer parameter(s)");
  };
  switch (spec.family) {
    case Family::cyclic:
      want_params(1);
      return cyclic_group(spec.params[0]);
    case Family::elementary_abelian:
      want_params(2);
      return elementary_abelian_group(spec.params[0], spec.params[1]);
    case Family::dihedral:
      want_params(1);
      return dihedral_group(spec.params[0]);
    case Family::symmetric:
      want_params(1);
      return symmetric_group(spec.params[0]);
    case Family::alternating:
      want_params(1);
      return alternating_group(spec.params[0]);
    case Family::quaternion8:
      want_params(0);
      return quaternion_group();
    case Family::psl2:
      want_params(1);
      return psl2_group(spec.params[0]);
    case Family::power_auto:
      want_params(2);
      return power_auto_group(spec.params[0], spec.params[1]);
    case Family::direct_product: {
      require(spec.factors.size() == 2 && spec.params.empty(),
              "direct_product: expected exactly two factor specs");
      return direct_product(build(spec.factors[0]), build(spec.factors[1]));
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace cgt
