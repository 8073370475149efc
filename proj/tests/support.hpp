// Shared helpers for the unit and property tests.
#pragma once

#include <vector>

#include "pgres/certificate.hpp"
#include "pgres/sampling.hpp"

namespace pgres::test {

inline std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = lo; q <= hi; ++q) {
    try {
      prime_power(q);
      out.push_back(q);
    } catch (const Error&) {
    }
  }
  return out;
}

inline FieldPtr field(std::uint32_t q) {
  const auto [p, h] = prime_power(q);
  return Field::make(p, h);
}

inline Plane plane(std::uint32_t q) { return Plane(field(q)); }

/// Random mixed set, biased toward small sizes and toward perturbations of
/// a known resolving set so both verdicts occur.
inline MixedSet random_mixed(Rng& rng, const Plane& pl, const MixedSet& seed) {
  const std::uint32_t n = pl.size();
  const auto mode = rng.below(3);
  if (mode == 0) {
    const auto kp = static_cast<std::uint32_t>(rng.below(2 * pl.order() + 2));
    const auto kl = static_cast<std::uint32_t>(rng.below(2 * pl.order() + 2));
    return MixedSet(random_k_subset(rng, n, kp), random_k_subset(rng, n, kl));
  }
  if (mode == 1) return MixedSet(random_subset(rng, n, 1, 4), random_subset(rng, n, 1, 4));
  // Flip one or two memberships of the seed.
  std::vector<char> pts(n), lns(n);
  for (auto p : seed.points) pts[p] = 1;
  for (auto l : seed.lines) lns[l] = 1;
  const auto flips = 1 + rng.below(2);
  for (std::uint64_t i = 0; i < flips; ++i) {
    auto& side = rng.below(2) ? pts : lns;
    side[rng.below(n)] ^= 1;
  }
  std::vector<std::uint32_t> ps, ls;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (pts[i]) ps.push_back(i);
    if (lns[i]) ls.push_back(i);
  }
  return MixedSet(ps, ls);
}

}  // namespace pgres::test
