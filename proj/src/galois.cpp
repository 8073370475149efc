#include "pgres/galois.hpp"

#include <algorithm>
#include <string>

namespace pgres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Remainder of monic-or-not f modulo monic g over GF(p); both constant first.
CoeffPoly poly_mod(CoeffPoly f, const CoeffPoly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p - (c * g[j]) % p) % p);
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

}  // namespace

bool is_irreducible_mod_p(const CoeffPoly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  for (std::size_t e = 1; e <= d / 2; ++e) {
    // all monic g of degree e
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    CoeffPoly g(e + 1, 0);
    g[e] = 1;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t r = k;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t h, std::optional<CoeffPoly> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (h == 0) throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > (1ull << 24)) throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^24");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->h_ = h;
  f->q_ = static_cast<std::uint32_t>(q);
  f->place_.assign(h, 1);
  for (std::uint32_t i = h - 1; i-- > 0;) f->place_[i] = f->place_[i + 1] * p;

  if (modulus) {
    if (modulus->size() != h + 1 || modulus->back() != 1)
      throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(h));
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    if (!is_irreducible_mod_p(*modulus, p))
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    f->modulus_ = *modulus;
  } else {
    // Candidates enumerate in the same digit order as elements.
    for (std::uint32_t k = 0; k < f->q_; ++k) {
      CoeffPoly cand = f->coeffs(Elem{k});
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p)) {
        f->modulus_ = std::move(cand);
        break;
      }
    }
  }

  f->one_ = Elem{f->place_[0]};
  f->minus_one_ = Elem{(p - 1) * f->place_[0]};
  f->order_factors_ = prime_factors(f->q_ - 1);
  for (std::uint32_t k = 1; k < f->q_; ++k) {
    if (f->multiplicative_order(Elem{k}) == f->q_ - 1) {
      f->primitive_ = Elem{k};
      break;
    }
  }
  if (f->q_ <= kTableLimit) f->build_tables();
  return f;
}

Elem Field::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  return Elem{index};
}

Elem Field::from_int(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r) * place_[0]};
}

CoeffPoly Field::coeffs(Elem a) const {
  CoeffPoly c(h_);
  std::uint32_t v = a.v;
  for (std::uint32_t i = h_; i-- > 0;) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > h_) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += (c[i] % p_) * place_[i];
  return Elem{v};
}

CoeffPoly Field::mul_poly(const CoeffPoly& a, const CoeffPoly& b) const {
  CoeffPoly r(2 * h_ - 1, 0);
  for (std::uint32_t i = 0; i < h_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < h_; ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
  }
  for (std::uint32_t k = 2 * h_ - 1; k-- > h_;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < h_; ++j) {
      const std::uint32_t idx = k - h_ + j;
      r[idx] = static_cast<std::uint32_t>((r[idx] + p_ - (c * modulus_[j]) % p_) % p_);
    }
    r[k] = 0;
  }
  r.resize(h_);
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (h_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
  const CoeffPoly r = mul_poly(coeffs(a), coeffs(b));
  return from_coeffs(r);
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (h_ == 1) return Elem{(a.v + b.v) % p_};
  if (p_ == 2) return Elem{a.v ^ b.v};
  std::uint32_t x = a.v, y = b.v, out = 0;
  for (std::uint32_t i = h_; i-- > 0;) {
    out += ((x % p_ + y % p_) % p_) * place_[i];
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem result = one_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (auto r : order_factors_) {
    while (ord % r == 0 && pow_slow(a, ord / r) == one_) ord /= r;
  }
  return ord;
}

void Field::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Elem x = one_;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x.v;
    log_[x.v] = i;
    x = mul_slow(x, primitive_);
  }
  zech_.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Elem s = add_digits(one_, Elem{exp_[i]});
    zech_[i] = s.v == 0 ? -1 : static_cast<std::int32_t>(log_[s.v]);
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (h_ == 1) {
    const std::uint32_t s = a.v + b.v;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  if (has_tables()) {
    const std::uint32_t n = q_ - 1;
    const std::uint32_t la = log_[a.v];
    const std::uint32_t lb = log_[b.v];
    const std::uint32_t d = lb >= la ? lb - la : lb + n - la;
    const std::int32_t z = zech_[d];
    if (z < 0) return Elem{0};
    return Elem{exp_[la + static_cast<std::uint32_t>(z)]};
  }
  return add_digits(a, b);
}

Elem Field::neg(Elem a) const {
  if (a.v == 0) return a;
  if (h_ == 1) return Elem{p_ - a.v};
  if (p_ == 2) return a;
  return mul(a, minus_one_);
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  if (h_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
  if (has_tables()) return Elem{exp_[log_[a.v] + log_[b.v]]};
  return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (has_tables()) {
    const std::uint32_t l = log_[a.v];
    return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
  }
  return pow_slow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one_;
  if (a.v == 0) return Elem{0};
  if (has_tables()) {
    const std::uint64_t n = q_ - 1;
    return Elem{exp_[(std::uint64_t(log_[a.v]) * (e % n)) % n]};
  }
  return pow_slow(a, e);
}

const Field& FieldElement::checked(const FieldElement& o) const {
  if (!same_field(o)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, checked(o).add(e_, o.e_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, checked(o).sub(e_, o.e_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, checked(o).mul(e_, o.e_)};
}

std::vector<Elem> subfield_embedding(const Field& big, const Field& sub) {
  if (big.characteristic() != sub.characteristic() ||
      std::uint64_t(sub.order()) * sub.order() != big.order())
    throw Error(ErrorKind::NotASquareOrder, "subfield order must be the square root of the field order");

  const CoeffPoly& m = sub.modulus();
  auto eval = [&](Elem x) {
    Elem acc = big.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, x), big.from_int(m[i]));
    return acc;
  };
  Elem theta = big.zero();
  bool found = false;
  for (std::uint32_t k = 0; k < big.order() && !found; ++k) {
    if (eval(Elem{k}) == big.zero()) {
      theta = Elem{k};
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NotASquareOrder, "no root of the subfield modulus");

  std::vector<Elem> image(sub.order());
  for (std::uint32_t k = 0; k < sub.order(); ++k) {
    const CoeffPoly c = sub.coeffs(Elem{k});
    Elem acc = big.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, theta), big.from_int(c[i]));
    image[k] = acc;
  }
  return image;
}

std::vector<Elem> subfield_elements(const Field& big, std::uint32_t sub_order) {
  std::vector<Elem> out;
  for (std::uint32_t k = 0; k < big.order(); ++k)
    if (big.pow(Elem{k}, sub_order) == Elem{k}) out.push_back(Elem{k});
  return out;
}

CubicExtension::CubicExtension(FieldPtr base) : base_(std::move(base)) {
  const Field& F = *base_;
  const std::uint64_t q = F.order();
  if (q * q * q > kOrderCeiling)
    throw Error(ErrorKind::FieldTooLarge, "q^3 = " + std::to_string(q * q * q) + " exceeds ceiling");
  order_factors_ = prime_factors(q * q * q - 1);

  // Lexicographically smallest monic cubic without roots in the base field.
  bool found = false;
  for (std::uint64_t k = 0; k < q * q * q && !found; ++k) {
    const Triple c{Elem{static_cast<std::uint32_t>(k / (q * q))},
                   Elem{static_cast<std::uint32_t>((k / q) % q)},
                   Elem{static_cast<std::uint32_t>(k % q)}};
    if (c[0].v == 0) continue;
    bool has_root = false;
    for (std::uint32_t x = 0; x < q && !has_root; ++x) {
      const Elem xe{x};
      Elem v = F.one();
      v = F.add(F.mul(v, xe), c[2]);
      v = F.add(F.mul(v, xe), c[1]);
      v = F.add(F.mul(v, xe), c[0]);
      has_root = v.v == 0;
    }
    if (!has_root) {
      modulus_ = c;
      found = true;
    }
  }
}

CubicExtension::Triple CubicExtension::mul(const Triple& a, const Triple& b) const {
  const Field& F = *base_;
  std::array<Elem, 5> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  // t^3 = -(c2 t^2 + c1 t + c0)
  for (int k = 4; k >= 3; --k) {
    const Elem c = r[k];
    if (c.v == 0) continue;
    for (int j = 0; j < 3; ++j) r[k - 3 + j] = F.sub(r[k - 3 + j], F.mul(c, modulus_[j]));
    r[k] = Elem{0};
  }
  return {r[0], r[1], r[2]};
}

CubicExtension::Triple CubicExtension::pow(Triple a, std::uint64_t e) const {
  Triple result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool CubicExtension::is_primitive(const Triple& a) const {
  if (a[0].v == 0 && a[1].v == 0 && a[2].v == 0) return false;
  const std::uint64_t q = base_->order();
  const std::uint64_t n = q * q * q - 1;
  for (auto r : order_factors_)
    if (pow(a, n / r) == one()) return false;
  return true;
}

CubicExtension::Triple CubicExtension::primitive_element() const {
  const std::uint64_t q = base_->order();
  for (std::uint64_t k = 1; k < q * q * q; ++k) {
    const Triple a{Elem{static_cast<std::uint32_t>(k / (q * q))},
                   Elem{static_cast<std::uint32_t>((k / q) % q)},
                   Elem{static_cast<std::uint32_t>(k % q)}};
    if (is_primitive(a)) return a;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive element found");
}

}  // namespace pgres
