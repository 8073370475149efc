#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace pgres;
using pgres::test::field;
using pgres::test::prime_powers;

namespace {

void check_triple(const Field& f, Elem a, Elem b, Elem c) {
  REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
  REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
  REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

void check_pair(const Field& f, Elem a, Elem b) {
  REQUIRE(f.add(a, b) == f.add(b, a));
  REQUIRE(f.mul(a, b) == f.mul(b, a));
  REQUIRE(f.sub(f.add(a, b), b) == a);
  if (b != f.zero()) REQUIRE(f.mul(f.div(a, b), b) == a);
}

}  // namespace

TEST_CASE("field axioms hold exhaustively up to order 16") {
  for (auto q : prime_powers(2, 16)) {
    const auto f = field(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Elem x{a};
      CHECK(f->add(x, f->zero()) == x);
      CHECK(f->mul(x, f->one()) == x);
      CHECK(f->add(x, f->neg(x)) == f->zero());
      if (a) CHECK(f->mul(x, f->inv(x)) == f->one());
      for (std::uint32_t b = 0; b < q; ++b) {
        check_pair(*f, x, Elem{b});
        for (std::uint32_t c = 0; c < q; ++c) check_triple(*f, x, Elem{b}, Elem{c});
      }
    }
  }
}

TEST_CASE("field axioms hold on random triples up to order 128") {
  Rng rng(7);
  for (auto q : prime_powers(17, 128)) {
    const auto f = field(q);
    for (int i = 0; i < 10000; ++i) {
      const Elem a{static_cast<std::uint32_t>(rng.below(q))};
      const Elem b{static_cast<std::uint32_t>(rng.below(q))};
      const Elem c{static_cast<std::uint32_t>(rng.below(q))};
      check_pair(*f, a, b);
      check_triple(*f, a, b, c);
    }
  }
}

TEST_CASE("primitive element has order q-1") {
  for (auto q : prime_powers(2, 256)) {
    const auto f = field(q);
    CHECK(f->multiplicative_order(f->primitive_element()) == q - 1);
  }
}

TEST_CASE("enumeration is coefficient-lexicographic with zero first") {
  const auto f = field(9);
  CHECK(f->element(0) == f->zero());
  std::vector<CoeffPoly> seen;
  for (std::uint32_t i = 0; i < 9; ++i) {
    CHECK(f->from_coeffs(f->coeffs(Elem{i})) == Elem{i});
    seen.push_back(f->coeffs(Elem{i}));
  }
  // Indices read the coefficient vector as base-p digits.
  for (std::uint32_t i = 1; i < 9; ++i) CHECK(seen[i - 1] != seen[i]);
  CHECK(field(9)->modulus() == f->modulus());
}

TEST_CASE("default modulus is irreducible and deterministic") {
  for (auto q : prime_powers(2, 128)) {
    const auto f = field(q);
    CHECK(is_irreducible_mod_p(f->modulus(), f->characteristic()));
    CHECK(*field(q) == *f);
  }
}

TEST_CASE("Frobenius is an automorphism fixing the prime field") {
  const auto f = field(16);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      const Elem x{a}, y{b};
      CHECK(f->frobenius(f->mul(x, y)) == f->mul(f->frobenius(x), f->frobenius(y)));
      CHECK(f->frobenius(f->add(x, y)) == f->add(f->frobenius(x), f->frobenius(y)));
    }
  CHECK(f->frobenius(f->one()) == f->one());
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  const auto big = field(25);
  const auto sub = field(5);
  const auto emb = subfield_embedding(*big, *sub);
  REQUIRE(emb.size() == 5);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      CHECK(emb[sub->add(Elem{a}, Elem{b}).v] == big->add(emb[a], emb[b]));
      CHECK(emb[sub->mul(Elem{a}, Elem{b}).v] == big->mul(emb[a], emb[b]));
    }
  CHECK(subfield_elements(*big, 5).size() == 5);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Field::make(6, 1), Error);
  try {
    Field::make(2, 2, CoeffPoly{1, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
  const auto f = field(7);
  CHECK_THROWS_AS(f->inv(f->zero()), Error);
  FieldElement a(field(7), Elem{3});
  FieldElement b(field(5), Elem{3});
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("prime power parsing") {
  CHECK(prime_power(121) == std::pair<std::uint32_t, std::uint32_t>{11, 2});
  CHECK(prime_power(128) == std::pair<std::uint32_t, std::uint32_t>{2, 7});
  CHECK_THROWS_AS(prime_power(12), Error);
  CHECK_THROWS_AS(prime_power(1), Error);
}
