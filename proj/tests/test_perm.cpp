#include <doctest.h>

#include <random>

#include "cgt/perm.hpp"

using cgt::Perm;
using cgt::format_cycles;
using cgt::parse_cycles;

TEST_CASE("composition applies the left factor first") {
  // (1 2 3) then (1 2): 1->2->1, 2->3->3, 3->1->2, so the result is (2 3)...
  // check against the hand-evaluated image table instead of guessing:
  Perm a = parse_cycles("(1 2 3)", 3);
  Perm b = parse_cycles("(1 2)", 3);
  Perm c = a * b;
  // image table: 1 -> b(a(1)) = b(2) = 1, 2 -> b(3) = 3, 3 -> b(1) = 2
  CHECK(c == parse_cycles("(2 3)", 3));

  CHECK(Perm::identity(5) * parse_cycles("(1 4 2)", 5) ==
        parse_cycles("(1 4 2)", 5));
  CHECK(parse_cycles("(1 2)", 2) * parse_cycles("(1 2)", 2) ==
        Perm::identity(2));
}

TEST_CASE("inverse and conjugation") {
  Perm p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p * p.inverse() == Perm::identity(5));
  CHECK(p.inverse() * p == Perm::identity(5));

  Perm q = parse_cycles("(1 4)", 5);
  Perm c = p.conjugated_by(q);
  CHECK(c == q.inverse() * p * q);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Perm::identity(7).order() == 1);
  CHECK(parse_cycles("(1 2 3)(4 5)", 5).order() == 6);

  // repeated-composition oracle for a (4,3,2)-element
  Perm p = parse_cycles("(1 2 3 4)(5 6 7)(8 9)", 9);
  Perm acc = p;
  std::uint64_t steps = 1;
  while (!acc.is_identity()) {
    acc *= p;
    ++steps;
  }
  CHECK(steps == 12);
  CHECK(p.order() == 12);
}

TEST_CASE("sign matches cycle structure") {
  CHECK(Perm::identity(4).sign() == 1);
  CHECK(parse_cycles("(1 2)", 4).sign() == -1);
  CHECK(parse_cycles("(1 2 3)", 4).sign() == 1);
  CHECK(parse_cycles("(1 2)(3 4)", 4).sign() == 1);
}

TEST_CASE("cycle parsing") {
  CHECK(parse_cycles("()", 4) == Perm::identity(4));
  Perm p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.images()[0] == 1);
  CHECK(p.images()[1] == 2);
  CHECK(p.images()[2] == 0);
  CHECK(p.images()[3] == 4);
  CHECK(p.images()[4] == 3);

  CHECK_THROWS_AS(parse_cycles("(1 2)(1 3)", 3), cgt::parse_error);  // repeated point
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), cgt::parse_error);       // out of range
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), cgt::parse_error);       // below range
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), cgt::parse_error);        // unclosed
  CHECK_THROWS_AS(parse_cycles("(1  2)", 3), cgt::parse_error);      // double space
  CHECK_THROWS_AS(parse_cycles("(01 2)", 3), cgt::parse_error);      // leading zero
  CHECK_THROWS_AS(parse_cycles("", 3), cgt::parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 -2)", 3), cgt::parse_error);      // sign
  CHECK_THROWS_AS(parse_cycles("(1 2) (3 4)", 4), cgt::parse_error); // stray space
}

TEST_CASE("singleton cycles are fixed points") {
  CHECK(parse_cycles("(3)", 5) == Perm::identity(5));
  CHECK(parse_cycles("(1 2)(3)(4 5)", 5) == parse_cycles("(1 2)(4 5)", 5));
  CHECK_THROWS_AS(parse_cycles("(3)(3)", 5), cgt::parse_error);  // still repeated
}

TEST_CASE("formatting is canonical") {
  CHECK(format_cycles(Perm::identity(6)) == "()");
  CHECK(format_cycles(parse_cycles("(4 5)(1 2 3)", 5)) == "(1 2 3)(4 5)");
  CHECK(format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 2 3)");
}

TEST_CASE("parse/format round trip on seeded random permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Perm::point degree = 1 + static_cast<Perm::point>(rng() % 50);
    std::vector<Perm::point> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p{std::move(img)};
    CHECK(parse_cycles(format_cycles(p), degree) == p);
  }
}

TEST_CASE("image tables must be bijections") {
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({2, 0}), std::invalid_argument);
}

TEST_CASE("parser rejects arbitrary garbage without crashing") {
  std::mt19937_64 rng(404);
  const std::string alphabet = "0123456789() -x";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text(rng() % 12, ' ');
    for (char& c : text) c = alphabet[rng() % alphabet.size()];
    try {
      Perm p = parse_cycles(text, 9);
      CHECK(parse_cycles(format_cycles(p), 9) == p);  // accepted: must round trip
    } catch (const cgt::parse_error&) {
      // rejected cleanly
    }
  }
}
