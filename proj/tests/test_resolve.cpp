#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace pgres;
using pgres::test::plane;

namespace {

MixedSet seed_for(const Plane& pl) {
  if (pl.order() == 2) return fano_resolving5(pl).set;
  if (pl.order() == 4) return hyperoval_resolving10(pl).set;
  return canonical_4q4(pl).set;
}

PointSet random_points(Rng& rng, const Plane& pl) {
  // Mix of uniform densities and sizes around 2q.
  if (rng.below(2)) return random_subset(rng, pl.size(), 1 + static_cast<std::uint32_t>(rng.below(3)), 4);
  const auto k = static_cast<std::uint32_t>(2 * pl.order() - 2 + rng.below(pl.order() + 2));
  return random_k_subset(rng, pl.size(), k);
}

std::vector<int> distance_list(Vertex v, const MixedSet& s, const Plane& pl) {
  std::vector<int> out;
  for (PointId p : s.points) out.push_back(distance(v, {Vertex::Kind::Point, p}, pl));
  for (LineId l : s.lines) out.push_back(distance(v, {Vertex::Kind::Line, l}, pl));
  return out;
}

}  // namespace

TEST_CASE("local criterion agrees with distance lists on random sets") {
  Rng rng(2024);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Plane pl = plane(q);
    const MixedSet seed = seed_for(pl);
    int positives = 0;
    for (int i = 0; i < 1000; ++i) {
      const MixedSet s = pgres::test::random_mixed(rng, pl, seed);
      const bool fast = is_resolving(s, pl).ok;
      REQUIRE(fast == is_resolving_naive(s, pl).ok);
      positives += fast;
    }
    CAPTURE(q);
    CHECK(positives > 0);
  }
}

TEST_CASE("semi-resolving iff distinct line distance lists") {
  Rng rng(99);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Plane pl = plane(q);
    int positives = 0;
    for (int i = 0; i < 1000; ++i) {
      const PointSet a = random_points(rng, pl);
      const bool semi = is_semi_resolving(a, pl).ok;
      REQUIRE(semi == has_distinct_line_distance_lists(a, pl));
      positives += semi;
    }
    CHECK(positives > 0);
  }
}

TEST_CASE("verdicts are invariant under collineations") {
  Rng rng(5);
  const Plane pl = plane(5);
  const auto& f = pl.field();
  const MixedSet seed = seed_for(pl);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Elem, 9> m;
    do
      for (auto& x : m) x = Elem{static_cast<std::uint32_t>(rng.below(5))};
    while (determinant(f, m) == Elem{0});
    const Permutation pp = pl.point_permutation(projectivity(f, m));
    const Permutation lp = pl.induced_line_permutation(pp);
    const MixedSet s = pgres::test::random_mixed(rng, pl, seed);
    std::vector<std::uint32_t> ip, il;
    for (auto p : s.points) ip.push_back(pp[p]);
    for (auto l : s.lines) il.push_back(lp[l]);
    const MixedSet image(ip, il);
    REQUIRE(is_resolving(s, pl).ok == is_resolving(image, pl).ok);
    REQUIRE(is_semi_resolving(s.points, pl).ok == is_semi_resolving(image.points, pl).ok);
    REQUIRE(secant_profile(s.points, pl).histogram == secant_profile(image.points, pl).histogram);
  }
}

TEST_CASE("duality: a point set semi-resolves lines iff its dual semi-resolves points") {
  Rng rng(17);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Plane pl = plane(q);
    for (int i = 0; i < 200; ++i) {
      const PointSet a = random_points(rng, pl);
      const bool semi = is_semi_resolving(a, pl).ok;
      REQUIRE(is_split_resolving(a, dualize(a), pl).ok == semi);
    }
  }
}

TEST_CASE("no semi-resolving set below 2q-1 for q <= 4") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Plane pl = plane(q);
    const std::uint32_t k = 2 * q - 2;
    // Supersets of semi-resolving sets are semi-resolving, so size 2q-2 suffices.
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
    std::uint64_t count = 0;
    bool any = false;
    while (true) {
      any = any || is_semi_resolving(c, pl).ok;
      ++count;
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && c[i] == pl.size() - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    CAPTURE(q);
    CHECK(count == binomial(pl.size(), k));
    CHECK_FALSE(any);
  }
}

TEST_CASE("a line meeting the point part twice is resolved") {
  Rng rng(8);
  const Plane pl = plane(4);
  for (int trial = 0; trial < 30; ++trial) {
    const MixedSet s(random_subset(rng, pl.size(), 1, 3), random_subset(rng, pl.size(), 1, 5));
    const auto counts = secant_counts(s.points, pl);
    for (LineId l = 0; l < pl.size(); ++l) {
      if (counts[l] < 2 || std::binary_search(s.lines.begin(), s.lines.end(), l)) continue;
      const auto mine = distance_list({Vertex::Kind::Line, l}, s, pl);
      for (std::uint32_t o = 0; o < pl.size(); ++o) {
        if (o != l) REQUIRE(distance_list({Vertex::Kind::Line, o}, s, pl) != mine);
        REQUIRE(distance_list({Vertex::Kind::Point, o}, s, pl) != mine);
      }
    }
  }
}

TEST_CASE("known sets") {
  const Plane p2 = plane(2);
  CHECK(is_resolving(fano_resolving5(p2).set, p2).ok);
  const Plane p4 = plane(4);
  const auto h = hyperoval(p4);
  CHECK(h.size() == 6);
  CHECK(secant_profile(h, p4).histogram[1] == 0);
  CHECK(is_resolving(hyperoval_resolving10(p4).set, p4).ok);
  // The canonical set minus one element fails with a named violation.
  const Plane p3 = plane(3);
  MixedSet s = canonical_4q4(p3).set;
  s.points.erase(s.points.begin());
  const auto r = is_resolving(s, p3);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK_FALSE(is_resolving_naive(s, p3).ok);
}

TEST_CASE("point index and frame line") {
  const Plane pl = plane(9);
  const auto a = baer_pair_semi_resolving(pl).set.points;
  const auto idx = point_index(a, pl);
  CHECK(idx.beta == static_cast<long>(a.size()) - 18);
  for (PointId p = 0; p < pl.size(); ++p) CHECK(idx.ind[p] == 2 * idx.ind0[p] + idx.ind1[p]);
  for (PointId p = 0; p < pl.size(); ++p) {
    if (std::binary_search(a.begin(), a.end(), p)) continue;
    const auto fl = choose_frame_line(p, idx.secants, pl);
    if (!fl) continue;
    CHECK(pl.incident(p, fl->line));
    CHECK(fl->s >= 2);
    CHECK(fl->s <= 8);
    CHECK(idx.secants[fl->line] == fl->s);
  }
}

TEST_CASE("index inequalities at the Baer-pair set of PG(2,9)") {
  const Plane pl = plane(9);
  const auto a = baer_pair_semi_resolving(pl).set.points;
  const auto r = check_prop48(a, pl);
  CHECK(r.beta == 6);
  CHECK(r.all_hold);
  CHECK_FALSE(r.evaluations.empty());
  CHECK_THROWS_AS(check_prop48(PointSet{0, 1}, pl), Error);
}

TEST_CASE("semioval check") {
  const Plane pl = plane(4);
  // A hyperoval minus a point is an oval: one tangent per point.
  auto h = hyperoval(pl);
  h.pop_back();
  const auto r = semioval_check(h, pl);
  CHECK(r.is_semioval);
  CHECK_FALSE(r.is_blocking_semioval);
  CHECK_FALSE(semioval_check(hyperoval(pl), pl).is_semioval);
}
