#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace pgres;
using pgres::test::plane;
using pgres::test::prime_powers;

namespace {

// Incidence pattern of the objects a completion adds to S*, relative to the
// named objects of its frame. Invariant under collineations.
std::vector<std::int64_t> added_signature(const Construction& c, const Plane& pl) {
  const auto& m = c.params;
  SStarParams sp;
  sp.e = m.at("e"), sp.f = m.at("f"), sp.r = m.at("R"), sp.r_prime = m.at("R_prime");
  sp.q = m.at("Q"), sp.l0 = m.at("l0"), sp.l1 = m.at("l1");
  const SStarFrame s = s_star(pl, sp);

  std::vector<PointId> np{s.p, s.r, s.r_prime, s.q};
  std::vector<LineId> nl{s.e, s.f, s.l0, s.l1, pl.line_through(s.r, s.q), pl.line_through(s.r_prime, s.q)};
  np.push_back(pl.meet(s.l0, s.l1));
  np.push_back(pl.meet(s.l0, nl[4]));
  np.push_back(pl.meet(s.l0, nl[5]));
  np.push_back(pl.meet(s.l1, nl[5]));
  std::vector<std::int64_t> sig{s.t.has_value()};
  if (s.t) {
    np.push_back(*s.t);
    nl.push_back(pl.line_through(s.r_prime, *s.t));
    np.push_back(pl.meet(s.l0, nl.back()));
  }
  auto code_point = [&](PointId x) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < nl.size(); ++i) v |= std::int64_t(pl.incident(x, nl[i])) << i;
    const auto it = std::find(np.begin(), np.end(), x);
    return (it == np.end() ? 99 : it - np.begin()) * 1000 + v;
  };
  auto code_line = [&](LineId l) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < np.size(); ++i) v |= std::int64_t(pl.incident(np[i], l)) << i;
    const auto it = std::find(nl.begin(), nl.end(), l);
    return -((it == nl.end() ? 99 : it - nl.begin()) * 10000 + v) - 1;
  };
  std::vector<std::int64_t> added;
  for (PointId x : c.set.points)
    if (!std::binary_search(s.points.begin(), s.points.end(), x)) added.push_back(code_point(x));
  for (LineId l : c.set.lines)
    if (!std::binary_search(s.lines.begin(), s.lines.end(), l)) added.push_back(code_line(l));
  std::sort(added.begin(), added.end());
  sig.insert(sig.end(), added.begin(), added.end());
  return sig;
}

}  // namespace

TEST_CASE("canonical 4q-4 resolves for 3 <= q <= 13") {
  for (auto q : prime_powers(3, 13)) {
    const Plane pl = plane(q);
    const auto c = canonical_4q4(pl);
    CAPTURE(q);
    CHECK(c.set.size() == 4 * q - 4);
    CHECK(is_resolving(c.set, pl).ok);
    CHECK(is_resolving(dual(c.set), pl).ok);
  }
}

TEST_CASE("every completion id verifies wherever it is feasible") {
  std::vector<std::uint32_t> qs = prime_powers(4, 13);
  qs.push_back(16);
  qs.push_back(25);
  for (auto q : qs) {
    const Plane pl = plane(q);
    for (int id = 1; id <= kConstructionCount; ++id) {
      CAPTURE(q);
      CAPTURE(id);
      try {
        const auto c = construction_c(id, pl);
        CHECK(c.set.size() == 4 * q - 4);
        CHECK(is_resolving(c.set, pl).ok);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SideConditionInfeasible);
      }
    }
  }
}

TEST_CASE("random feasible completion assignments verify") {
  Rng rng(42);
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    const Plane pl = plane(q);
    int feasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int id = 1 + static_cast<int>(rng.below(kConstructionCount));
      const auto base = construction_c(1, pl).params;
      SStarParams sp;
      sp.e = base.at("e"), sp.f = base.at("f"), sp.r = base.at("R"), sp.r_prime = base.at("R_prime");
      sp.q = base.at("Q");
      const auto through_p = pl.lines_through(base.at("P"));
      const auto through_r = pl.lines_through(base.at("R"));
      sp.l0 = through_p[rng.below(through_p.size())];
      sp.l1 = through_r[rng.below(through_r.size())];
      try {
        const auto c = construction_c(id, pl, sp);
        ++feasible;
        CAPTURE(id);
        REQUIRE(is_resolving(c.set, pl).ok);
        REQUIRE(c.params.at("l0") == *sp.l0);
        REQUIRE(c.params.at("l1") == *sp.l1);
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::SideConditionInfeasible);
      }
    }
    CHECK(feasible > 0);
  }
}

TEST_CASE("the 32 completions are pairwise type-distinct at q = 23") {
  const Plane pl = plane(23);
  std::set<std::vector<std::int64_t>> seen;
  for (int id = 1; id <= kConstructionCount; ++id) {
    const auto c = construction_c(id, pl);
    CAPTURE(id);
    CHECK(is_resolving(c.set, pl).ok);
    CHECK(seen.insert(added_signature(c, pl)).second);
  }
  CHECK(seen.size() == 32);
}

TEST_CASE("completion errors") {
  const Plane p3 = plane(3);
  CHECK_THROWS_AS(construction_c(1, p3), Error);
  const Plane p5 = plane(5);
  try {
    construction_c(33, p5);
    FAIL("accepted id 33");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidId);
  }
  SStarParams sp;
  sp.u = 0;
  try {
    construction_c(1, p5, sp);
    FAIL("accepted an unused parameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("small resolving sets") {
  const Plane p2 = plane(2);
  const auto f = fano_resolving5(p2);
  CHECK(f.set.size() == 5);
  CHECK(is_resolving(f.set, p2).ok);
  const Plane p4 = plane(4);
  const auto h = hyperoval_resolving10(p4);
  CHECK(h.set.size() == 10);
  CHECK(is_resolving(h.set, p4).ok);
  CHECK(dual_hyperoval(p4).size() == 6);
  CHECK_THROWS_AS(fano_resolving5(p4), Error);
  CHECK_THROWS_AS(hyperoval(plane(5)), Error);
}

TEST_CASE("Baer partition") {
  for (std::uint32_t q : {4u, 9u, 16u, 25u}) {
    const Plane pl = plane(q);
    const auto r = *exact_sqrt(q);
    const auto parts = baer_partition(pl);
    CHECK(parts.size() == q - r + 1);
    std::vector<int> hit(pl.size(), 0);
    // Closed under the order-(q + sqrt q + 1) Singer subgroup.
    const Permutation s = singer_cycle(pl);
    Permutation g(pl.size());
    for (std::uint32_t i = 0; i < pl.size(); ++i) g[i] = i;
    for (std::uint32_t i = 0; i < q - r + 1; ++i) g = compose(s, g);
    for (const auto& part : parts) {
      CHECK(part.size() == q + r + 1);
      CHECK(is_baer_subplane(part, pl));
      for (PointId p : part) {
        ++hit[p];
        CHECK(std::binary_search(part.begin(), part.end(), g[p]));
      }
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    CHECK(is_baer_subplane(baer_subplane(pl), pl));
  }
  CHECK_THROWS_AS(baer_partition(plane(8)), Error);
}

TEST_CASE("semi-resolving generators for 3 <= q <= 13") {
  for (auto q : prime_powers(3, 13)) {
    const Plane pl = plane(q);
    CAPTURE(q);
    const auto t = vertexless_triangle(pl, false);
    CHECK(t.set.points.size() == 3 * q - 3);
    CHECK(is_semi_resolving(t.set.points, pl).ok);
    if (q >= 4) {
      const auto t4 = vertexless_triangle(pl, true);
      CHECK(t4.set.points.size() == 3 * q - 4);
      CHECK(is_semi_resolving(t4.set.points, pl).ok);
    }
    const auto b = three_line_double_blocking(pl);
    CHECK(b.set.points.size() == 3 * q);
    CHECK(secant_profile(b.set.points, pl).is_double_blocking);
    const auto semi = semi_from_double_blocking(pl, b.set.points, b.set.points[1]);
    CHECK(is_semi_resolving(semi, pl).ok);
  }
}

TEST_CASE("Baer-pair sets") {
  for (std::uint32_t q : {9u, 16u, 25u}) {
    const Plane pl = plane(q);
    const auto r = *exact_sqrt(q);
    const auto semi = baer_pair_semi_resolving(pl);
    CHECK(semi.set.points.size() == 2 * q + 2 * r);
    CHECK(is_semi_resolving(semi.set.points, pl).ok);
    const auto db = baer_pair_double_blocking(pl);
    CHECK(db.set.points.size() == 2 * q + 2 * r + 2);
    CHECK(secant_profile(db.set.points, pl).is_double_blocking);
  }
}

TEST_CASE("blocking-set preconditions") {
  const Plane pl = plane(5);
  const PointSet line(pl.points_on(0).begin(), pl.points_on(0).end());
  CHECK_THROWS_AS(semi_from_double_blocking(pl, line, line[0]), Error);
  CHECK_THROWS_AS(semi_from_blocking_pair(pl, line, line, line[0], line[1]), Error);
  CHECK_THROWS_AS(vertexless_triangle(plane(2), false), Error);
}
