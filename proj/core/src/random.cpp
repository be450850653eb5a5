#include "jetfol/random.hpp"

namespace jetfol {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Scalar Sampler::scalar() {
  if (field_ == Field::real) return Scalar::real(std::uniform_real_distribution<double>(-bound_, bound_)(rng_));
  return Scalar::rational(integer(-bound_, bound_), integer(1, 4));
}

Scalar Sampler::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

std::vector<Scalar> Sampler::scalars(std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar());
  return out;
}

Matrix Sampler::invertible_matrix(int l) {
  const auto n = static_cast<std::size_t>(l);
  for (;;) {
    Matrix m(n, n, field_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar();
    if (!determinant(m).is_zero()) return m;
  }
}

PolyVector Sampler::polyvector(int l, int min_degree, int max_degree, double density) {
  Coeffs c;
  for (int d = min_degree; d <= max_degree; ++d)
    for (const auto& t : module_basis(l, d))
      if (coin(density)) {
        Scalar s = scalar();
        if (!s.is_zero()) c.emplace(t, s);
      }
  return PolyVector(l, min_degree, max_degree, field_, std::move(c));
}

JetDiffeo Sampler::unipotent(int l, int k, double density) {
  Coeffs c = JetMap::identity(l, k, field_).coeffs();
  if (k >= 2) {
    const auto higher = polyvector(l, 2, k, density);
    c.insert(higher.coeffs().begin(), higher.coeffs().end());
  }
  return JetDiffeo(JetMap(l, k, field_, std::move(c)));
}

JetDiffeo Sampler::jet(int l, int k, double density) {
  Matrix a = invertible_matrix(l);
  Coeffs c = JetMap::linear(a, k).coeffs();
  if (k >= 2) {
    const auto higher = polyvector(l, 2, k, density);
    c.insert(higher.coeffs().begin(), higher.coeffs().end());
  }
  return JetDiffeo(JetMap(l, k, field_, std::move(c)));
}

G31Coords Sampler::g31() { return G31Coords{scalar(), scalar(), nonzero_scalar()}; }

}  // namespace jetfol
