// Generators for the explicit resolving, semi-resolving and blocking-set
// constructions. Each returns the set together with the named indices used
// to build it.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgres/resolve.hpp"

namespace pgres {

struct Construction {
  std::string name;
  MixedSet set;
  std::map<std::string, std::uint32_t> params;
};

/// P_S = [PQ] u [PR] \ {P,Q,R}, L_S = [P] u [R] \ {PQ, PR, RQ}; size 4q-4.
Construction canonical_4q4(const Plane& plane, PointId p, PointId q, PointId r);
/// Smallest-index triangle: points 0, 1 and the first point off their join.
Construction canonical_4q4(const Plane& plane);

/// Three vertices of a triangle and, through two of them, the line avoiding
/// the other two vertices. Fano plane only.
Construction fano_resolving5(const Plane& plane);

/// Conic xz = y^2 plus its nucleus (0:1:0); q even.
PointSet hyperoval(const Plane& plane);
/// Lines skew to the hyperoval.
LineSet dual_hyperoval(const Plane& plane);
/// Hyperoval minus its smallest point, skew lines minus the smallest; q = 4.
Construction hyperoval_resolving10(const Plane& plane);

/// Frame parameters of the structure S*. Unset fields are filled with the
/// smallest-index consistent choice.
struct SStarParams {
  std::optional<LineId> e, f;
  std::optional<PointId> r, r_prime, q;
  std::optional<LineId> l0, l1;
  /// Id-specific free objects (see construction_c).
  std::optional<PointId> u, v, z;
};

struct SStarFrame {
  LineId e = 0, f = 0;
  PointId p = 0, r = 0, r_prime = 0, q = 0;
  LineId l0 = 0, l1 = 0;
  std::optional<PointId> t;  // f n l1 when Q is not on l1
  PointSet points;           // ([e] \ {P,R,R'}) u ([f] \ {P,Q})
  LineSet lines;             // ([P] \ {e,f,l0}) u ([R] \ {e,l1})

  std::map<std::string, std::uint32_t> params() const;
};

/// Builds S* for a complete, valid assignment of e, f, R, R', Q, l0, l1.
SStarFrame s_star(const Plane& plane, const SStarParams& params);

inline constexpr int kConstructionCount = 32;

/// S* plus the two objects of completion `id` (1..32): a resolving set of
/// size 4q-4 whenever the id's incidence conditions are satisfiable. Unset
/// parameters are solved by scanning candidates in index order. Throws
/// InvalidId, OrderTooSmall (q < 4) or SideConditionInfeasible.
Construction construction_c(int id, const Plane& plane, const SStarParams& params = {});

/// Swaps points and lines.
MixedSet dual(const MixedSet& s);

/// Points with all normalized coordinates in GF(sqrt q).
PointSet baer_subplane(const Plane& plane);
/// Orbits of the order-(q + sqrt q + 1) subgroup of the Singer group,
/// sorted by smallest element: q - sqrt q + 1 disjoint Baer subplanes.
std::vector<PointSet> baer_partition(const Plane& plane);
std::array<PointSet, 2> disjoint_baer_pair(const Plane& plane);
/// Every line meets `s` in 1 or sqrt(q)+1 points.
bool is_baer_subplane(std::span<const PointId> s, const Plane& plane);

/// B \ {drop} for a double blocking set B.
PointSet semi_from_double_blocking(const Plane& plane, std::span<const PointId> b, PointId drop);
/// (B1 u B2) \ {drop1, drop2} for disjoint blocking sets with drop_i in B_i.
PointSet semi_from_blocking_pair(const Plane& plane, std::span<const PointId> b1,
                                 std::span<const PointId> b2, PointId drop1, PointId drop2);
/// Two Baer parts minus their smallest points; size 2q + 2 sqrt q.
Construction baer_pair_semi_resolving(const Plane& plane);
/// Union of two disjoint Baer subplanes; size 2q + 2 sqrt q + 2.
Construction baer_pair_double_blocking(const Plane& plane);

/// Coordinate triangle x = 0, y = 0, z = 0 without its vertices (3q-3),
/// optionally minus its smallest point as well (3q-4).
Construction vertexless_triangle(const Plane& plane, bool drop_extra);
/// All points of the coordinate triangle; size 3q.
Construction three_line_double_blocking(const Plane& plane);

/// Smallest integer r with r*r == q, if any.
std::optional<std::uint32_t> exact_sqrt(std::uint32_t q);

}  // namespace pgres
