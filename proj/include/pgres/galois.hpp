// Exact arithmetic in GF(p^h).
//
// Elements are addressed by their enumeration index: the coefficient vector
// (c0, c1, ..., c_{h-1}) of the residue polynomial c0 + c1 x + ... read as a
// base-p numeral with c0 as the most significant digit. Index 0 is the zero
// element, so enumeration is coefficient-lexicographic with 0 first. The
// plane's canonical point indexing is built on top of this order.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pgres/error.hpp"

namespace pgres {

/// Field element handle: the enumeration index inside its field.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Coefficient list, constant term first.
using CoeffPoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class Field {
 public:
  /// Tables (log/antilog/Zech) are built up to this order.
  static constexpr std::uint32_t kTableLimit = 1u << 16;

  /// Builds GF(p^h). Without a modulus the lexicographically smallest monic
  /// irreducible of degree h is used.
  static FieldPtr make(std::uint32_t p, std::uint32_t h,
                       std::optional<CoeffPoly> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return h_; }
  std::uint32_t order() const { return q_; }
  const CoeffPoly& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return one_; }
  Elem element(std::uint32_t index) const;
  /// Image of the integer c under Z -> GF(p).
  Elem from_int(std::int64_t c) const;

  CoeffPoly coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a -> a^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;
  /// First element in enumeration order with multiplicative order q-1.
  Elem primitive_element() const { return primitive_; }

  /// Structural equality: same p, h and modulus.
  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.h_ == b.h_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;

  CoeffPoly mul_poly(const CoeffPoly& a, const CoeffPoly& b) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t h_ = 0;
  std::uint32_t q_ = 0;
  CoeffPoly modulus_;
  Elem one_{};
  Elem minus_one_{};
  Elem primitive_{};
  std::vector<std::uint32_t> place_;  // place_[i] = p^(h-1-i)
  std::vector<std::uint64_t> order_factors_;
  // exp_ is doubled so log sums need no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
};

/// True iff the monic polynomial over GF(p) has no factor of degree in [1, deg/2].
bool is_irreducible_mod_p(const CoeffPoly& f, std::uint32_t p);

/// Value type carrying its field; arithmetic across different fields throws
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {}

  const FieldPtr& field() const { return field_; }
  Elem raw() const { return e_; }
  CoeffPoly coeffs() const { return field_->coeffs(e_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(e_)}; }
  FieldElement inv() const { return {field_, field_->inv(e_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(e_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.same_field(b) && a.e_ == b.e_;
  }

 private:
  bool same_field(const FieldElement& o) const {
    return field_ == o.field_ || *field_ == *o.field_;
  }
  const Field& checked(const FieldElement& o) const;

  FieldPtr field_;
  Elem e_;
};

/// Injective ring homomorphism GF(r) -> GF(r^2). Entry i is the image of the
/// element with index i in `sub`. The generator x of `sub` goes to the first
/// root (enumeration order) of sub's modulus in `big`.
std::vector<Elem> subfield_embedding(const Field& big, const Field& sub);

/// Indices of the elements of `big` lying in its subfield of the given order.
std::vector<Elem> subfield_elements(const Field& big, std::uint32_t sub_order);

/// GF(q^3) realised as GF(q)[t]/(c(t)) for a monic irreducible cubic c.
/// Elements are coefficient triples (a0, a1, a2) over the base field, which
/// is exactly the homogeneous coordinate vector of a point of PG(2,q).
class CubicExtension {
 public:
  using Triple = std::array<Elem, 3>;
  /// Largest supported q^3.
  static constexpr std::uint64_t kOrderCeiling = 1ull << 21;

  explicit CubicExtension(FieldPtr base);

  const Field& base() const { return *base_; }
  /// Lower coefficients (c0, c1, c2) of the monic cubic c.
  const Triple& modulus() const { return modulus_; }

  Triple mul(const Triple& a, const Triple& b) const;
  Triple pow(Triple a, std::uint64_t e) const;
  Triple one() const { return {base_->one(), Elem{0}, Elem{0}}; }
  bool is_primitive(const Triple& a) const;
  /// First primitive triple in lexicographic enumeration (a0 most significant).
  Triple primitive_element() const;

 private:
  FieldPtr base_;
  Triple modulus_{};
  std::vector<std::uint64_t> order_factors_;
};

}  // namespace pgres
