#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace pgres;
using pgres::test::field;
using pgres::test::plane;

namespace {

Poly random_poly(Rng& rng, const FieldPtr& f, unsigned max_degree) {
  std::vector<Elem> c(1 + rng.below(max_degree + 1));
  for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng.below(f->order()))};
  return Poly(f, c);
}

}  // namespace

TEST_CASE("polynomial ring identities") {
  Rng rng(4);
  for (std::uint32_t q : {2u, 5u, 9u}) {
    const auto f = field(q);
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(rng, f, 8), b = random_poly(rng, f, 8), c = random_poly(rng, f, 5);
      REQUIRE((a + b) * c == a * c + b * c);
      REQUIRE((a - b) + b == a);
      const Elem x{static_cast<std::uint32_t>(rng.below(q))};
      REQUIRE((a * b)(x) == f->mul(a(x), b(x)));
      if (!b.is_zero()) {
        const auto [quot, rem] = a.divmod(b);
        REQUIRE(quot * b + rem == a);
        REQUIRE(rem.degree() < b.degree());
      }
      const Poly g = gcd(a * c, b * c);
      if (!c.is_zero()) REQUIRE(g.divmod(c.monic()).second.is_zero());
    }
  }
  const auto f = field(7);
  CHECK(Poly(f).degree() == Poly::kZeroDegree);
  CHECK_THROWS_AS(Poly::constant(f, Elem{1}).divmod(Poly(f)), Error);
  CHECK_THROWS_AS(Poly::constant(f, Elem{1}) + Poly::constant(field(5), Elem{1}), Error);
  // X^q - X vanishes on the whole field.
  const Poly v = Poly::field_vanishing(f);
  for (std::uint32_t x = 0; x < 7; ++x) CHECK(v(Elem{x}) == Elem{0});
  CHECK(v.derivative() == Poly::constant(f, f->neg(f->one())));
}

TEST_CASE("specialisation commutes with evaluation") {
  Rng rng(6);
  for (std::uint32_t q : {3u, 4u, 7u}) {
    const auto f = field(q);
    for (int i = 0; i < 30; ++i) {
      const auto pts = random_affine_set(rng, f);
      const BiPoly r = redei_polynomial(pts, f);
      CHECK(r.total_degree() == static_cast<int>(pts.size()));
      for (std::uint32_t m = 0; m < q; ++m)
        for (std::uint32_t b = 0; b < q; ++b) {
          Elem direct = f->one();
          for (const auto& [x, y] : pts) direct = f->mul(direct, f->sub(f->add(f->mul(Elem{m}, x), Elem{b}), y));
          REQUIRE(r.specialize(Elem{m})(Elem{b}) == direct);
          REQUIRE(r.evaluate(Elem{b}, Elem{m}) == direct);
        }
    }
  }
}

TEST_CASE("gcd degree counts lines of each slope") {
  Rng rng(12);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const auto f = field(q);
    for (int i = 0; i < 40; ++i) {
      const auto pts = random_affine_set(rng, f);
      const BiPoly r = redei_polynomial(pts, f);
      for (std::uint32_t m = 0; m < q; ++m) {
        // Points on y = m x + b, per intercept b.
        std::vector<int> on(q, 0);
        for (const auto& [x, y] : pts) ++on[f->sub(y, f->mul(Elem{m}, x)).v];
        int expected = 0;
        for (int c : on) expected += (c >= 1) + (c >= 2);
        const Poly rm = r.specialize(Elem{m});
        const int k = gcd_degree_with_square_vanishing(rm);
        REQUIRE(k == expected);
        REQUIRE(k == gcd_degree_with_square_vanishing_euclid(rm));
        REQUIRE(k >= 0);
        REQUIRE(k <= static_cast<int>(2 * q));
      }
    }
  }
}

TEST_CASE("Redei polynomial of plane points") {
  const Plane pl = plane(5);
  const std::vector<PointId> pts{0, 7, 13};
  const BiPoly r = redei_polynomial(pts, pl);
  CHECK(r.total_degree() == 3);
  const std::vector<PointId> bad{0, 25};
  try {
    redei_polynomial(bad, pl);
    FAIL("ideal point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAffinePoint);
  }
}

TEST_CASE("profile identity on random frames") {
  Rng rng(21);
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const Plane pl = plane(q);
    int eligible = 0;
    while (eligible < 100) {
      const auto s = random_subset(rng, pl.size(), 1, 3);
      try {
        const auto p = redei_profile(s, pl);
        ++eligible;
        REQUIRE(p.identity_ok);
        REQUIRE(p.euclid_ok);
        REQUIRE(p.euclid_checked == (q <= 7));
        REQUIRE(p.szw_ok);
        REQUIRE(p.delta_le_t);
        REQUIRE(pl.incident(p.focus, p.frame_line));
        REQUIRE_FALSE(std::binary_search(s.begin(), s.end(), p.infinity_point));
        for (std::uint32_t m = 0; m < q; ++m)
          if (p.in_d[m]) REQUIRE(p.k[m] == static_cast<int>(2 * q) - p.ind[m]);
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NoValidFrame);
      }
    }
  }
}

TEST_CASE("index quadratic at every eligible point of the PG(2,9) Baer pair") {
  const Plane pl = plane(9);
  const auto s = baer_pair_semi_resolving(pl).set.points;
  const auto idx = point_index(s, pl);
  CHECK(idx.beta == 6);
  int checked = 0;
  for (PointId p = 0; p < pl.size(); ++p) {
    if (std::binary_search(s.begin(), s.end(), p) || idx.ind[p] > 7) continue;
    if (!choose_frame_line(p, idx.secants, pl)) continue;
    const auto prof = redei_profile(s, p, pl);
    CAPTURE(p);
    CHECK(prof.quadratic >= 0);
    CHECK(prof.ind_focus == idx.ind[p]);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("gcd inequality on random Redei instances") {
  Rng rng(77);
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto f = field(q);
    for (int i = 0; i < 500; ++i) {
      const auto rep = random_szw_instance(rng, f);
      REQUIRE(rep.holds);
      REQUIRE(rep.lhs <= rep.rhs);
      REQUIRE(rep.k.size() == q);
    }
  }
}

TEST_CASE("gcd inequality examples") {
  const auto f = field(5);
  const Poly w = Poly::field_vanishing(f);
  const BiPoly v = BiPoly::from_x(w * w);
  // u = X^2 - Y: two roots for square y, none otherwise.
  const BiPoly u = BiPoly::from_terms(f, {{f->one(), 2, 0}, {f->neg(f->one()), 0, 1}});
  const auto rep = szonyi_weiner_check(u, v, Elem{1});
  CHECK(rep.holds);
  CHECK(rep.k[1] == 2);
  CHECK(rep.k[0] == 2);
  // The leading X-term vanishes at Y^0 for u = X Y.
  const BiPoly bad = BiPoly::from_terms(f, {{f->one(), 1, 1}});
  try {
    szonyi_weiner_check(bad, v, Elem{0});
    FAIL("degree drop accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeUnstable);
  }
}
