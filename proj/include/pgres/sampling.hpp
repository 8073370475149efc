// Seeded random instances shared by the CLI, the property tests and the
// acceptance runner. Reduction is done by hand so streams are identical
// across standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pgres/redei.hpp"

namespace pgres {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

 private:
  std::mt19937_64 g_;
};

/// Each of 0..n-1 independently with probability num/den, ascending.
std::vector<std::uint32_t> random_subset(Rng& rng, std::uint32_t n, std::uint32_t num, std::uint32_t den);
/// Exactly k distinct elements of 0..n-1, ascending.
std::vector<std::uint32_t> random_k_subset(Rng& rng, std::uint32_t n, std::uint32_t k);

/// Random affine point set of GF(q)^2, size in [1, q^2], distinct points.
std::vector<AffinePoint> random_affine_set(Rng& rng, const FieldPtr& field);

/// One gcd-inequality instance: u the Redei polynomial of a random affine
/// set, v = (X^q - X)^2, y0 random.
SzonyiWeinerReport random_szw_instance(Rng& rng, const FieldPtr& field);

}  // namespace pgres
