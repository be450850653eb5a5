#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetfol/jetgroup.hpp"

namespace jetfol {

/// Small random inputs for property checks. Rationals have numerators in
/// [-bound, bound] and denominators in [1, 4]; floats are uniform in [-bound, bound].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, Field f = Field::rational, int bound = 5) : rng_(seed), field_(f), bound_(bound) {}

  Field field() const { return field_; }
  std::mt19937_64& engine() { return rng_; }

  int integer(int lo, int hi);
  Scalar scalar();
  Scalar nonzero_scalar();
  std::vector<Scalar> scalars(std::size_t n);
  Matrix invertible_matrix(int l);
  /// Random element of G_{k,l}; `density` is the chance each higher monomial is nonzero.
  JetDiffeo jet(int l, int k, double density = 0.5);
  /// Random element of the unipotent subgroup K_{k,l}.
  JetDiffeo unipotent(int l, int k, double density = 0.5);
  PolyVector polyvector(int l, int min_degree, int max_degree, double density = 0.5);
  G31Coords g31();

 private:
  bool coin(double p);
  std::mt19937_64 rng_;
  Field field_;
  int bound_;
};

}  // namespace jetfol
