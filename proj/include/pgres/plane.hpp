// PG(2,q) as an indexed incidence structure.
//
// Canonical indexing (shared by points and lines):
//   (x:y:1)  -> x*q + y      (x, y are field enumeration indices)
//   (1:m:0)  -> q^2 + m
//   (0:1:0)  -> q^2 + q
// Lines use the same scheme on [u:v:w]; a point (x:y:z) lies on [u:v:w] iff
// ux + vy + wz = 0. Under this convention point i and line i are dual, so
// dualization is the identity on indices with the kind swapped.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pgres/galois.hpp"

namespace pgres {

using PointId = std::uint32_t;
using LineId = std::uint32_t;
using Coords = std::array<Elem, 3>;

/// Relabeling of point (or line) indices: perm[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// x -> M * frobenius^k(x), applied to homogeneous column vectors.
struct Collineation {
  std::array<Elem, 9> matrix{};  // row-major
  std::uint32_t frobenius_power = 0;
};

class Plane {
 public:
  explicit Plane(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t order() const { return q_; }
  /// Number of points (= number of lines), q^2 + q + 1.
  std::uint32_t size() const { return n_; }

  const Coords& point_coords(PointId p) const { return coords_[p]; }
  const Coords& line_coords(LineId l) const { return coords_[l]; }
  /// Index of the projective class of a nonzero vector.
  std::uint32_t index_of(const Coords& v) const;
  Coords normalize(const Coords& v) const;

  std::span<const PointId> points_on(LineId l) const {
    return {points_on_.data() + std::size_t(l) * (q_ + 1), q_ + 1};
  }
  std::span<const LineId> lines_through(PointId p) const {
    return {lines_through_.data() + std::size_t(p) * (q_ + 1), q_ + 1};
  }
  bool incident(PointId p, LineId l) const {
    return (incidence_[std::size_t(p) * row_words_ + l / 64] >> (l % 64)) & 1u;
  }

  /// Line joining two distinct points; EqualArguments when p == r.
  LineId line_through(PointId p, PointId r) const;
  /// Common point of two distinct lines.
  PointId meet(LineId a, LineId b) const;

  /// The ideal line [0:0:1], the point (m) = (1:m:0) and (infinity) = (0:1:0).
  LineId line_at_infinity() const { return 0; }
  PointId ideal_point(Elem m) const { return q_ * q_ + m.v; }
  PointId vertical_point() const { return q_ * q_ + q_; }
  bool is_affine(PointId p) const { return p < q_ * q_; }

  /// Coordinates of u x + v y + w z for a point and a line.
  Elem dot(const Coords& a, const Coords& b) const;
  Coords cross(const Coords& a, const Coords& b) const;

  PointId apply(const Collineation& g, PointId p) const;
  Permutation point_permutation(const Collineation& g) const;
  /// Line permutation induced by a collineation given on points.
  Permutation induced_line_permutation(const Permutation& point_perm) const;

 private:
  FieldPtr field_;
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 0;
  std::size_t row_words_ = 0;
  std::vector<Coords> coords_;
  std::vector<PointId> points_on_;
  std::vector<LineId> lines_through_;
  std::vector<std::uint64_t> incidence_;
};

Plane build_plane(FieldPtr field);

/// Dual of a set of points (as lines) or lines (as points). With canonical
/// indexing this is the identity on indices; kept as a named operation so
/// call sites say what they mean.
std::vector<std::uint32_t> dualize(std::span<const std::uint32_t> xs);

/// Point permutation given by multiplication with a primitive element of
/// GF(q^3), points read as GF(q^3)* / GF(q)*. Throws FieldTooLarge above the
/// cubic-extension ceiling.
Permutation singer_cycle(const Plane& plane);

/// Point permutation of the field automorphism x -> x^p of GF(q^3), which
/// normalises the Singer group.
Permutation singer_frobenius(const Plane& plane);

Collineation identity_collineation(const Field& f);
/// Coordinate-wise Frobenius x -> x^(p^k).
Collineation frobenius_collineation(const Field& f, std::uint32_t k);
/// Throws SingularMatrix when det = 0.
Collineation projectivity(const Field& f, const std::array<Elem, 9>& matrix);

Elem determinant(const Field& f, const std::array<Elem, 9>& m);
std::array<Elem, 9> inverse(const Field& f, const std::array<Elem, 9>& m);

/// Composition of permutations: (a after b)[i] = a[b[i]].
Permutation compose(const Permutation& a, const Permutation& b);
/// Length of every cycle of the permutation, in order of first element.
std::vector<std::uint32_t> cycle_lengths(const Permutation& perm);

}  // namespace pgres
