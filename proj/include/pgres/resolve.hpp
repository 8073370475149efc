// Verification of resolving, semi-resolving and blocking properties in the
// incidence graph of PG(2,q).
//
// Vertex ids used in witnesses: point i is i, line j is n + j, n = q^2+q+1.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgres/plane.hpp"

namespace pgres {

using PointSet = std::vector<PointId>;
using LineSet = std::vector<LineId>;

/// Candidate resolving set S = P_S u L_S; both parts sorted and duplicate-free.
struct MixedSet {
  PointSet points;
  LineSet lines;

  MixedSet() = default;
  MixedSet(PointSet pts, LineSet lns);

  std::size_t size() const { return points.size() + lines.size(); }
  friend bool operator==(const MixedSet&, const MixedSet&) = default;
};

/// Sorts and removes duplicates.
PointSet make_set(std::vector<std::uint32_t> xs);

struct Vertex {
  enum class Kind : std::uint8_t { Point, Line };
  Kind kind = Kind::Point;
  std::uint32_t index = 0;
};

/// Graph distance in the incidence graph: 0, 1, 2 or 3.
int distance(Vertex u, Vertex v, const Plane& plane);

enum class ViolationKind {
  SkewLinePair,                  // P1:  two outer lines skew to P_S
  UncoveredPointPair,            // P1': two outer points not covered by L_S
  TangentPairThroughInnerPoint,  // P2:  inner point, two outer tangents
  OneCoveredPairOnInnerLine,     // P2': inner line, two outer 1-covered points
  DistanceListCollision,         // naive checker: two vertices, same list
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::uint32_t> witnesses;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyStats {
  std::size_t points = 0;
  std::size_t lines = 0;
  /// Tangents plus twice the skew lines, relative to the point part.
  long t = 0;
  /// |P_S| - 2q.
  long beta = 0;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
  VerifyStats stats;
};

/// Builds all 2n distance lists and reports one colliding pair. Test oracle.
VerifyReport is_resolving_naive(const MixedSet& s, const Plane& plane);
/// Local criterion (properties P1, P1', P2, P2'); full violation list.
VerifyReport is_resolving(const MixedSet& s, const Plane& plane);

/// At most one skew line, and at most one tangent through each point of A.
VerifyReport is_semi_resolving(std::span<const PointId> a, const Plane& plane);
/// Whether the lines have pairwise distinct distance lists w.r.t. A.
bool has_distinct_line_distance_lists(std::span<const PointId> a, const Plane& plane);

/// Points semi-resolve lines and the dual of the lines semi-resolves points.
/// Line-side violations are reported as UncoveredPointPair /
/// OneCoveredPairOnInnerLine.
VerifyReport is_split_resolving(std::span<const PointId> points, std::span<const LineId> lines,
                                const Plane& plane);

/// |l n A| for every line l.
std::vector<std::uint32_t> secant_counts(std::span<const PointId> a, const Plane& plane);

struct SecantProfile {
  /// histogram[i] = number of i-secants, i = 0..q+1.
  std::vector<std::uint32_t> histogram;
  bool is_blocking = false;
  bool is_double_blocking = false;
};

SecantProfile secant_profile(std::span<const PointId> a, const Plane& plane);

struct IndexReport {
  std::vector<int> ind0;  // skew lines through each point
  std::vector<int> ind1;  // tangents through each point
  std::vector<int> ind;   // 2*ind0 + ind1
  std::vector<std::uint32_t> secants;
  long t = 0;
  long beta = 0;
};

IndexReport point_index(std::span<const PointId> a, const Plane& plane);

struct FrameLine {
  LineId line = 0;
  std::uint32_t s = 0;
};

/// The line through `p` meeting A in s points, 2 <= s <= q-1, with minimal
/// (s, index). Empty when no such line exists.
std::optional<FrameLine> choose_frame_line(PointId p, std::span<const std::uint32_t> secants,
                                           const Plane& plane);

struct QuadraticEvaluation {
  PointId point = 0;
  int index = 0;
  std::optional<FrameLine> frame;
  long with_t = 0;        // ind^2 - (q - beta) ind + t
  long with_size = 0;     // ind^2 - (q - beta) ind + 2q + beta
  bool holds = false;     // both values >= 0
};

struct Prop48Report {
  std::uint32_t q = 0;
  long beta = 0;
  long t = 0;
  std::vector<QuadraticEvaluation> evaluations;
  bool all_hold = true;
  /// Small/large index split; evaluated only when 4*beta <= q - 10.
  bool dichotomy_applicable = false;
  bool dichotomy_holds = true;
  long large_threshold = 0;  // q - beta - 2
  std::vector<PointId> dichotomy_offenders;
};

/// Evaluates both quadratic index inequalities at every point P outside A
/// with ind(P) <= q-2. Throws PreconditionUnmet unless A is semi-resolving
/// with beta <= 2q-4.
Prop48Report check_prop48(std::span<const PointId> a, const Plane& plane);

struct SemiovalReport {
  bool is_semioval = false;
  bool is_blocking_semioval = false;
  /// |A| - ceil(9q/4 - 3).
  long bound_margin = 0;
};

SemiovalReport semioval_check(std::span<const PointId> a, const Plane& plane);

}  // namespace pgres
