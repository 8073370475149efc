#include "pgres/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace pgres {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = g_(); while (x >= limit);
  return x % n;
}

std::vector<std::uint32_t> random_subset(Rng& rng, std::uint32_t n, std::uint32_t num, std::uint32_t den) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng.chance(num, den)) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> random_k_subset(Rng& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  k = std::min(k, n);
  for (std::uint32_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<AffinePoint> random_affine_set(Rng& rng, const FieldPtr& field) {
  const std::uint32_t q = field->order();
  const auto size = static_cast<std::uint32_t>(1 + rng.below(q * q));
  std::vector<AffinePoint> out;
  for (std::uint32_t i : random_k_subset(rng, q * q, size)) out.emplace_back(Elem{i / q}, Elem{i % q});
  return out;
}

SzonyiWeinerReport random_szw_instance(Rng& rng, const FieldPtr& field) {
  const auto pts = random_affine_set(rng, field);
  const BiPoly u = redei_polynomial(pts, field);
  const Poly w = Poly::field_vanishing(field);
  const BiPoly v = BiPoly::from_x(w * w);
  const Elem y0{static_cast<std::uint32_t>(rng.below(field->order()))};
  return szonyi_weiner_check(u, v, y0);
}

}  // namespace pgres
