// Polynomials over GF(q), Redei polynomials of affine point sets and the
// gcd-degree profile used to bound point indices.
#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "pgres/resolve.hpp"

namespace pgres {

/// Univariate polynomial, ascending coefficients, no trailing zeros.
class Poly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  explicit Poly(FieldPtr field, std::vector<Elem> coeffs = {});
  static Poly constant(FieldPtr field, Elem c);
  /// c * X^d
  static Poly monomial(FieldPtr field, Elem c, unsigned d);
  /// X^q - X over GF(q).
  static Poly field_vanishing(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const;
  Elem leading() const;

  Elem operator()(Elem x) const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem c) const;
  Poly derivative() const;
  Poly monic() const;
  /// Quotient and remainder; DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  friend bool operator==(const Poly& a, const Poly& b) { return *a.field_ == *b.field_ && a.c_ == b.c_; }

 private:
  const Field& checked(const Poly& o) const;
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Polynomial in X with coefficients depending on a second variable Y:
/// terms[j] is the coefficient of Y^j, a polynomial in X. In the Redei
/// setting X is B and Y is M.
class BiPoly {
 public:
  explicit BiPoly(FieldPtr field, std::vector<Poly> terms = {});
  /// p(X), constant in Y.
  static BiPoly from_x(const Poly& p);
  /// Sum of c * X^i * Y^j over (c, i, j).
  static BiPoly from_terms(FieldPtr field, const std::vector<std::tuple<Elem, unsigned, unsigned>>& terms);

  const FieldPtr& field() const { return field_; }
  const std::vector<Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;
  Elem coeff(unsigned i, unsigned j) const;

  /// Substitutes Y := y.
  Poly specialize(Elem y) const;
  Elem evaluate(Elem x, Elem y) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return *a.field_ == *b.field_ && a.terms_ == b.terms_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Poly> terms_;
};

using AffinePoint = std::pair<Elem, Elem>;

/// R(B, M) = prod (M x_i + B - y_i).
BiPoly redei_polynomial(std::span<const AffinePoint> points, FieldPtr field);
/// Same for plane points; NonAffinePoint unless every point is (x:y:1).
BiPoly redei_polynomial(std::span<const PointId> points, const Plane& plane);

/// deg gcd(f, (X^q - X)^2) for f that splits into linear factors: simple
/// roots count once, repeated roots twice. Evaluation and derivative test.
int gcd_degree_with_square_vanishing(const Poly& f);
/// The same quantity by Euclid's algorithm.
int gcd_degree_with_square_vanishing_euclid(const Poly& f);

struct RedeiProfile {
  std::uint32_t q = 0;
  PointId focus = 0;            // P, the point whose index is bounded
  LineId frame_line = 0;        // l_inf
  std::uint32_t s = 0;          // |l_inf n S|
  PointId infinity_point = 0;   // (infinity), not in S
  std::array<Elem, 9> transform{};  // maps l_inf to z = 0, (infinity) to (0:1:0)
  std::vector<AffinePoint> affine;  // images of S \ l_inf
  std::vector<PointId> slope_points;  // original point of slope m, indexed by m
  std::vector<int> k;           // k_m = deg gcd(R(m,B), (B^q - B)^2)
  std::vector<char> in_d;       // slope point outside S
  std::vector<int> ind;         // ind(m) of the slope point
  bool identity_ok = true;      // k_m = 2q - ind(m) on D
  bool euclid_checked = false;
  bool euclid_ok = true;
  long delta = 0;               // sum of ind(m) over D
  long t = 0;
  long beta = 0;
  std::uint32_t focus_slope = 0;
  int k_focus = 0;
  int ind_focus = 0;
  bool delta_le_t = true;
  bool delta_le_size = true;
  /// sum over D of (k_m - k_p) against (|S| - s - k_p)(2q - k_p).
  long szw_lhs = 0;
  long szw_rhs = 0;
  bool szw_ok = true;
  /// ind(P)^2 - (q - beta) ind(P) + delta.
  long quadratic = 0;
};

/// Profile of S seen from the focus P (not in S). The frame line is the
/// line through P chosen by choose_frame_line; NoValidFrame when none
/// exists. Euclid cross-checks every k_m when q <= euclid_limit.
RedeiProfile redei_profile(std::span<const PointId> s, PointId focus, const Plane& plane,
                           std::uint32_t euclid_limit = 7);
/// Focus = smallest point outside S with a valid frame line.
RedeiProfile redei_profile(std::span<const PointId> s, const Plane& plane, std::uint32_t euclid_limit = 7);

struct SzonyiWeinerReport {
  std::vector<int> k;  // k_y for every y
  long lhs = 0;
  long rhs = 0;
  bool holds = true;
};

/// Both sides of the gcd-degree inequality for u, v at y0, with deg the
/// total degree. DegreeUnstable unless the coefficient of X^deg(u) Y^0 in u
/// is nonzero.
SzonyiWeinerReport szonyi_weiner_check(const BiPoly& u, const BiPoly& v, Elem y0);

}  // namespace pgres
