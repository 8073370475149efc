#include "pgres/redei.hpp"

#include <algorithm>

namespace pgres {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, unsigned d) {
  std::vector<Elem> v(d + 1, Elem{0});
  v[d] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::field_vanishing(FieldPtr field) {
  const Field& F = *field;
  std::vector<Elem> v(F.order() + 1, F.zero());
  v[F.order()] = F.one();
  v[1] = F.add(v[1], F.neg(F.one()));
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

const Field& Poly::checked(const Poly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  return *field_;
}

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }

Elem Poly::leading() const { return c_.empty() ? Elem{0} : c_.back(); }

Elem Poly::operator()(Elem x) const {
  const Field& F = *field_;
  Elem acc = F.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& F = checked(o);
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  const Field& F = checked(o);
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  const Field& F = checked(o);
  if (c_.empty() || o.c_.empty()) return Poly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, F.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::scale(Elem c) const {
  const Field& F = *field_;
  std::vector<Elem> v(c_);
  for (auto& x : v) x = F.mul(x, c);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  const Field& F = *field_;
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scale(field_->inv(c_.back()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  const Field& F = checked(d);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Elem> r(c_);
  std::vector<Elem> quo(c_.size() - d.c_.size() + 1, F.zero());
  const Elem lead_inv = F.inv(d.c_.back());
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Elem f = F.mul(r[i + d.c_.size() - 1], lead_inv);
    quo[i] = f;
    if (f.v == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] = F.sub(r[i + j], F.mul(f, d.c_[j]));
  }
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  if (!(*a.field() == *b.field())) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(FieldPtr field, std::vector<Poly> terms) : field_(std::move(field)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (!(*t.field() == *field_)) throw Error(ErrorKind::FieldMismatch, "coefficient over another field");
  trim();
}

BiPoly BiPoly::from_x(const Poly& p) { return BiPoly(p.field(), {p}); }

BiPoly BiPoly::from_terms(FieldPtr field, const std::vector<std::tuple<Elem, unsigned, unsigned>>& terms) {
  std::vector<Poly> by_y;
  for (const auto& [c, i, j] : terms) {
    while (by_y.size() <= j) by_y.emplace_back(field);
    by_y[j] = by_y[j] + Poly::monomial(field, c, i);
  }
  return BiPoly(std::move(field), std::move(by_y));
}

void BiPoly::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

int BiPoly::degree_x() const {
  int d = Poly::kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

int BiPoly::degree_y() const { return terms_.empty() ? Poly::kZeroDegree : static_cast<int>(terms_.size()) - 1; }

int BiPoly::total_degree() const {
  int d = Poly::kZeroDegree;
  for (std::size_t j = 0; j < terms_.size(); ++j)
    if (!terms_[j].is_zero()) d = std::max(d, terms_[j].degree() + static_cast<int>(j));
  return d;
}

Elem BiPoly::coeff(unsigned i, unsigned j) const { return j < terms_.size() ? terms_[j].coeff(i) : Elem{0}; }

Poly BiPoly::specialize(Elem y) const {
  const Field& F = *field_;
  Poly acc(field_);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc.scale(y) + *it;
  (void)F;
  return acc;
}

Elem BiPoly::evaluate(Elem x, Elem y) const { return specialize(y)(x); }

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (!(*field_ == *o.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  std::vector<Poly> v(std::max(terms_.size(), o.terms_.size()), Poly(field_));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j < terms_.size()) v[j] = v[j] + terms_[j];
    if (j < o.terms_.size()) v[j] = v[j] + o.terms_[j];
  }
  return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (!(*field_ == *o.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (terms_.empty() || o.terms_.empty()) return BiPoly(field_);
  std::vector<Poly> v(terms_.size() + o.terms_.size() - 1, Poly(field_));
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = 0; j < o.terms_.size(); ++j) v[i + j] = v[i + j] + terms_[i] * o.terms_[j];
  return BiPoly(field_, std::move(v));
}

// ---------------------------------------------------------------------------
// Redei polynomials

BiPoly redei_polynomial(std::span<const AffinePoint> points, FieldPtr field) {
  const Field& F = *field;
  // Dense product: coefficient of B^i M^j kept in a flat table.
  const std::size_t n = points.size();
  std::vector<std::vector<Elem>> c(n + 1, std::vector<Elem>(n + 1, F.zero()));  // c[j][i]
  c[0][0] = F.one();
  for (std::size_t k = 0; k < n; ++k) {
    const Elem x = points[k].first;
    const Elem ny = F.neg(points[k].second);
    // multiply by (B - y) + M x, degrees grow to k + 1
    for (std::size_t j = k + 1; j-- > 0;)
      for (std::size_t i = k + 1 - j; i-- > 0;) {
        const Elem cur = c[j][i];
        if (cur.v == 0) continue;
        c[j][i] = F.mul(cur, ny);
        c[j][i + 1] = F.add(c[j][i + 1], cur);
        c[j + 1][i] = F.add(c[j + 1][i], F.mul(cur, x));
      }
  }
  std::vector<Poly> terms;
  terms.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) terms.emplace_back(field, std::move(c[j]));
  return BiPoly(std::move(field), std::move(terms));
}

BiPoly redei_polynomial(std::span<const PointId> points, const Plane& plane) {
  std::vector<AffinePoint> pts;
  for (PointId p : points) {
    if (p >= plane.size()) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    if (!plane.is_affine(p)) throw Error(ErrorKind::NonAffinePoint, "point " + std::to_string(p) + " is not affine");
    const Coords& c = plane.point_coords(p);
    pts.emplace_back(c[0], c[1]);
  }
  return redei_polynomial(pts, plane.field_ptr());
}

int gcd_degree_with_square_vanishing(const Poly& f) {
  const Field& F = *f.field();
  if (f.is_zero()) return 2 * static_cast<int>(F.order());
  const Poly df = f.derivative();
  int k = 0;
  for (std::uint32_t b = 0; b < F.order(); ++b) {
    if (f(Elem{b}).v != 0) continue;
    ++k;
    if (df(Elem{b}).v == 0) ++k;
  }
  return k;
}

int gcd_degree_with_square_vanishing_euclid(const Poly& f) {
  const Poly v = Poly::field_vanishing(f.field());
  return gcd(f, v * v).degree();
}

// ---------------------------------------------------------------------------
// Profiles

namespace {

std::array<Elem, 9> columns(const Coords& a, const Coords& b, const Coords& c) {
  return {a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]};
}

}  // namespace

RedeiProfile redei_profile(std::span<const PointId> s, PointId focus, const Plane& plane,
                           std::uint32_t euclid_limit) {
  const Field& F = plane.field();
  const std::uint32_t n = plane.size();
  const std::uint32_t q = plane.order();
  std::vector<char> in(n, 0);
  for (PointId p : s) {
    if (p >= n) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    in[p] = 1;
  }
  if (focus >= n || in[focus]) throw Error(ErrorKind::InvalidArgument, "focus must be a point outside the set");

  const IndexReport idx = point_index(s, plane);
  const auto frame = choose_frame_line(focus, idx.secants, plane);
  if (!frame) throw Error(ErrorKind::NoValidFrame, "no line through the focus meets the set in 2..q-1 points");

  RedeiProfile prof;
  prof.q = q;
  prof.focus = focus;
  prof.frame_line = frame->line;
  prof.s = frame->s;

  const auto on_line = plane.points_on(frame->line);
  const auto inf = std::find_if(on_line.begin(), on_line.end(), [&](PointId p) { return !in[p] && p != focus; });
  if (inf == on_line.end()) throw Error(ErrorKind::NoValidFrame, "no free point for the vertical direction");
  prof.infinity_point = *inf;
  const PointId other = on_line[0] != *inf ? on_line[0] : on_line[1];
  PointId origin = 0;
  while (plane.incident(origin, frame->line)) ++origin;

  // back maps e1 -> other, e2 -> (infinity), e3 -> origin.
  const auto back = columns(plane.point_coords(other), plane.point_coords(*inf), plane.point_coords(origin));
  prof.transform = inverse(F, back);
  const Collineation to_std = projectivity(F, prof.transform);
  const Collineation from_std = projectivity(F, back);

  std::vector<char> member(n, 0);
  for (PointId p : s) {
    if (plane.incident(p, frame->line)) continue;
    const Coords& c = plane.point_coords(plane.apply(to_std, p));
    prof.affine.emplace_back(c[0], c[1]);
  }
  std::sort(prof.affine.begin(), prof.affine.end());

  prof.slope_points.resize(q);
  for (std::uint32_t m = 0; m < q; ++m) prof.slope_points[m] = plane.apply(from_std, plane.ideal_point(Elem{m}));
  prof.focus_slope = plane.point_coords(plane.apply(to_std, focus))[1].v;

  const BiPoly r = redei_polynomial(prof.affine, plane.field_ptr());
  prof.k.resize(q);
  prof.in_d.resize(q);
  prof.ind.resize(q);
  prof.euclid_checked = q <= euclid_limit;
  for (std::uint32_t m = 0; m < q; ++m) {
    const Poly rm = r.specialize(Elem{m});
    prof.k[m] = gcd_degree_with_square_vanishing(rm);
    if (prof.euclid_checked && gcd_degree_with_square_vanishing_euclid(rm) != prof.k[m]) prof.euclid_ok = false;
    const PointId sp = prof.slope_points[m];
    prof.in_d[m] = !in[sp];
    prof.ind[m] = idx.ind[sp];
    if (prof.in_d[m]) {
      prof.delta += prof.ind[m];
      if (prof.k[m] != 2 * static_cast<int>(q) - prof.ind[m]) prof.identity_ok = false;
    }
  }

  prof.t = idx.t;
  prof.beta = idx.beta;
  prof.delta_le_t = prof.delta <= prof.t;
  prof.delta_le_size = prof.delta <= static_cast<long>(s.size());
  prof.k_focus = prof.k[prof.focus_slope];
  prof.ind_focus = idx.ind[focus];
  for (std::uint32_t m = 0; m < q; ++m) prof.szw_lhs += std::max(0, prof.k[m] - prof.k_focus);
  prof.szw_rhs = (static_cast<long>(prof.affine.size()) - prof.k_focus) * (2L * q - prof.k_focus);
  prof.szw_ok = prof.szw_lhs <= prof.szw_rhs;
  const long ip = prof.ind_focus;
  prof.quadratic = ip * ip - (static_cast<long>(q) - prof.beta) * ip + prof.delta;
  return prof;
}

RedeiProfile redei_profile(std::span<const PointId> s, const Plane& plane, std::uint32_t euclid_limit) {
  std::vector<char> in(plane.size(), 0);
  for (PointId p : s) {
    if (p >= plane.size()) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    in[p] = 1;
  }
  const auto sec = secant_counts(s, plane);
  for (PointId p = 0; p < plane.size(); ++p)
    if (!in[p] && choose_frame_line(p, sec, plane)) return redei_profile(s, p, plane, euclid_limit);
  throw Error(ErrorKind::NoValidFrame, "no point outside the set has a valid frame line");
}

SzonyiWeinerReport szonyi_weiner_check(const BiPoly& u, const BiPoly& v, Elem y0) {
  if (!(*u.field() == *v.field())) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  const int du = u.total_degree();
  if (u.is_zero() || u.coeff(static_cast<unsigned>(du), 0).v == 0)
    throw Error(ErrorKind::DegreeUnstable, "X^deg(u) must have a nonzero constant coefficient");
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "v must be nonzero");
  const int dv = v.total_degree();
  const std::uint32_t q = u.field()->order();
  if (y0.v >= q) throw Error(ErrorKind::InvalidArgument, "y0 is not a field element");

  SzonyiWeinerReport rep;
  rep.k.resize(q);
  for (std::uint32_t y = 0; y < q; ++y) {
    const Poly g = gcd(u.specialize(Elem{y}), v.specialize(Elem{y}));
    rep.k[y] = g.degree();
  }
  const long k0 = rep.k[y0.v];
  for (auto k : rep.k) rep.lhs += std::max(0L, k - k0);
  rep.rhs = (du - k0) * (dv - k0);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

}  // namespace pgres
