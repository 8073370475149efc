#include "pgres/plane.hpp"

#include <algorithm>

namespace pgres {

Plane::Plane(FieldPtr field) : field_(std::move(field)) {
  const Field& F = *field_;
  q_ = F.order();
  n_ = q_ * q_ + q_ + 1;
  row_words_ = (n_ + 63) / 64;

  coords_.resize(n_);
  for (std::uint32_t x = 0; x < q_; ++x)
    for (std::uint32_t y = 0; y < q_; ++y) coords_[x * q_ + y] = {Elem{x}, Elem{y}, F.one()};
  for (std::uint32_t m = 0; m < q_; ++m) coords_[q_ * q_ + m] = {F.one(), Elem{m}, F.zero()};
  coords_[n_ - 1] = {F.zero(), F.one(), F.zero()};

  points_on_.resize(std::size_t(n_) * (q_ + 1));
  const std::array<Coords, 3> basis{Coords{F.one(), F.zero(), F.zero()},
                                    Coords{F.zero(), F.one(), F.zero()},
                                    Coords{F.zero(), F.zero(), F.one()}};
  std::vector<PointId> pts;
  pts.reserve(q_ + 1);
  for (LineId l = 0; l < n_; ++l) {
    // Two distinct points on l from cross products with the standard basis.
    std::vector<PointId> cands;
    for (const auto& e : basis) {
      const Coords c = cross(coords_[l], e);
      if (c[0].v == 0 && c[1].v == 0 && c[2].v == 0) continue;
      const PointId idx = index_of(c);
      if (std::find(cands.begin(), cands.end(), idx) == cands.end()) cands.push_back(idx);
    }
    const Coords& a = coords_[cands[0]];
    const Coords& b = coords_[cands[1]];
    pts.clear();
    pts.push_back(cands[1]);
    for (std::uint32_t t = 0; t < q_; ++t) {
      const Elem te{t};
      pts.push_back(index_of({F.add(a[0], F.mul(te, b[0])), F.add(a[1], F.mul(te, b[1])),
                              F.add(a[2], F.mul(te, b[2]))}));
    }
    std::sort(pts.begin(), pts.end());
    std::copy(pts.begin(), pts.end(), points_on_.begin() + std::size_t(l) * (q_ + 1));
  }

  lines_through_.resize(std::size_t(n_) * (q_ + 1));
  incidence_.assign(std::size_t(n_) * row_words_, 0);
  std::vector<std::uint32_t> fill(n_, 0);
  for (LineId l = 0; l < n_; ++l) {
    for (PointId p : points_on(l)) {
      lines_through_[std::size_t(p) * (q_ + 1) + fill[p]++] = l;
      incidence_[std::size_t(p) * row_words_ + l / 64] |= std::uint64_t{1} << (l % 64);
    }
  }
}

Elem Plane::dot(const Coords& a, const Coords& b) const {
  const Field& F = *field_;
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

Coords Plane::cross(const Coords& a, const Coords& b) const {
  const Field& F = *field_;
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Coords Plane::normalize(const Coords& v) const {
  const Field& F = *field_;
  Elem s;
  if (v[2].v != 0) s = v[2];
  else if (v[0].v != 0) s = v[0];
  else if (v[1].v != 0) s = v[1];
  else throw Error(ErrorKind::InvalidArgument, "zero vector has no projective class");
  const Elem si = F.inv(s);
  return {F.mul(v[0], si), F.mul(v[1], si), F.mul(v[2], si)};
}

std::uint32_t Plane::index_of(const Coords& v) const {
  const Coords c = normalize(v);
  if (c[2].v != 0) return c[0].v * q_ + c[1].v;
  if (c[0].v != 0) return q_ * q_ + c[1].v;
  return q_ * q_ + q_;
}

LineId Plane::line_through(PointId p, PointId r) const {
  if (p == r) throw Error(ErrorKind::EqualArguments, "line_through needs two distinct points");
  return index_of(cross(coords_[p], coords_[r]));
}

PointId Plane::meet(LineId a, LineId b) const {
  if (a == b) throw Error(ErrorKind::EqualArguments, "meet needs two distinct lines");
  return index_of(cross(coords_[a], coords_[b]));
}

PointId Plane::apply(const Collineation& g, PointId p) const {
  const Field& F = *field_;
  Coords v = coords_[p];
  if (g.frobenius_power != 0) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < g.frobenius_power % F.degree(); ++i) e *= F.characteristic();
    for (auto& x : v) x = F.pow(x, e);
  }
  const auto& m = g.matrix;
  Coords w{};
  for (int r = 0; r < 3; ++r)
    w[r] = F.add(F.add(F.mul(m[3 * r], v[0]), F.mul(m[3 * r + 1], v[1])), F.mul(m[3 * r + 2], v[2]));
  return index_of(w);
}

Permutation Plane::point_permutation(const Collineation& g) const {
  Permutation perm(n_);
  for (PointId p = 0; p < n_; ++p) perm[p] = apply(g, p);
  return perm;
}

Permutation Plane::induced_line_permutation(const Permutation& point_perm) const {
  Permutation perm(n_);
  for (LineId l = 0; l < n_; ++l) {
    const auto pts = points_on(l);
    perm[l] = line_through(point_perm[pts[0]], point_perm[pts[1]]);
  }
  return perm;
}

Plane build_plane(FieldPtr field) { return Plane(std::move(field)); }

std::vector<std::uint32_t> dualize(std::span<const std::uint32_t> xs) {
  return {xs.begin(), xs.end()};
}

namespace {

Permutation extension_action(const Plane& plane, bool frobenius) {
  const CubicExtension ext(plane.field_ptr());
  const CubicExtension::Triple omega = ext.primitive_element();
  const std::uint32_t p = plane.field().characteristic();
  Permutation perm(plane.size());
  for (PointId i = 0; i < plane.size(); ++i) {
    const Coords& c = plane.point_coords(i);
    const CubicExtension::Triple t{c[0], c[1], c[2]};
    const CubicExtension::Triple img = frobenius ? ext.pow(t, p) : ext.mul(omega, t);
    perm[i] = plane.index_of({img[0], img[1], img[2]});
  }
  return perm;
}

}  // namespace

Permutation singer_cycle(const Plane& plane) { return extension_action(plane, false); }

Permutation singer_frobenius(const Plane& plane) { return extension_action(plane, true); }

Collineation identity_collineation(const Field& f) {
  Collineation g;
  g.matrix = {f.one(), f.zero(), f.zero(), f.zero(), f.one(), f.zero(), f.zero(), f.zero(), f.one()};
  return g;
}

Collineation frobenius_collineation(const Field& f, std::uint32_t k) {
  Collineation g = identity_collineation(f);
  g.frobenius_power = k % f.degree();
  return g;
}

Elem determinant(const Field& F, const std::array<Elem, 9>& m) {
  auto minor = [&](int a, int b, int c, int d) { return F.sub(F.mul(m[a], m[d]), F.mul(m[b], m[c])); };
  Elem det = F.mul(m[0], minor(4, 5, 7, 8));
  det = F.sub(det, F.mul(m[1], minor(3, 5, 6, 8)));
  det = F.add(det, F.mul(m[2], minor(3, 4, 6, 7)));
  return det;
}

std::array<Elem, 9> inverse(const Field& F, const std::array<Elem, 9>& m) {
  const Elem det = determinant(F, m);
  if (det.v == 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  const Elem di = F.inv(det);
  auto cof = [&](int r, int c) {
    int rs[2], cs[2], k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != r) rs[k++] = i;
    k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != c) cs[k++] = i;
    Elem v = F.sub(F.mul(m[3 * rs[0] + cs[0]], m[3 * rs[1] + cs[1]]),
                   F.mul(m[3 * rs[0] + cs[1]], m[3 * rs[1] + cs[0]]));
    return ((r + c) % 2) ? F.neg(v) : v;
  };
  std::array<Elem, 9> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[3 * r + c] = F.mul(cof(c, r), di);  // adjugate = cofactor^T
  return out;
}

Collineation projectivity(const Field& f, const std::array<Elem, 9>& matrix) {
  if (determinant(f, matrix).v == 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  Collineation g;
  g.matrix = matrix;
  return g;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<std::uint32_t> cycle_lengths(const Permutation& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

}  // namespace pgres
