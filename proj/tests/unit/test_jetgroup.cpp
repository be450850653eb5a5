#include <doctest.h>

#include "jetfol/jetgroup.hpp"
#include "jetfol/random.hpp"
#include "oracle.hpp"

using namespace jetfol;

namespace {

Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }
const Field R = Field::rational;

PolyVector t_field(int d, const Scalar& c) { return PolyVector::monomial(1, 0, MultiIndex({d}), c); }

G31Coords g31(long a1, long a2, long a0) { return {Q(a1), Q(a2), Q(a0)}; }

// The product law written out by hand.
G31Coords law(const G31Coords& a, const G31Coords& b) {
  return {a.a1 + b.a1 / a.a0, a.a2 + b.a2 / (a.a0 * a.a0), a.a0 * b.a0};
}

}  // namespace

TEST_CASE("exp_jet examples") {
  CHECK(exp_jet(PolyVector::zero(2, 2, 4, R), 4).is_identity());
  Scalar a1 = Q(3, 2), a2 = Q(-1, 3);
  auto x = t_field(2, a1) + t_field(3, a2);
  auto e = exp_jet(x, 3);
  CHECK(e.coeff(0, MultiIndex({1})) == Q(1));
  CHECK(e.coeff(0, MultiIndex({2})) == a1);
  CHECK(e.coeff(0, MultiIndex({3})) == a2 + a1 * a1);
  CHECK(exp_jet(t_field(3, Q(5)), 3) == oracle::series({1, 0, 5}));
}

TEST_CASE("log_jet examples") {
  CHECK(log_jet(JetDiffeo::identity(1, 3, R)).is_zero());
  auto v = log_jet(oracle::series({1, 1, 1}));
  CHECK(v.coeff(0, MultiIndex({2})) == Q(1));
  CHECK(v.coeff(0, MultiIndex({3})) == Q(0));
  CHECK(log_jet(oracle::series({1, 0, 1})) == t_field(3, Q(1)).with_degrees(2, 3));
}

TEST_CASE("bracket examples") {
  Sampler s(21);
  auto x = s.polyvector(2, 1, 3);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(t_field(2, Q(1)), t_field(3, Q(1))) == t_field(4, Q(1)));
  auto x2dy = PolyVector::monomial(2, 1, MultiIndex({2, 0}), Q(1));
  auto xydy = PolyVector::monomial(2, 1, MultiIndex({1, 1}), Q(1));
  CHECK(bracket(x2dy, xydy) == PolyVector::monomial(2, 1, MultiIndex({3, 0}), Q(1)));
}

TEST_CASE("section examples") {
  CHECK(section_sk(JetDiffeo::identity(2, 3, R)).is_identity());
  Sampler s(22);
  auto a = s.invertible_matrix(2);
  CHECK(section_sk(JetDiffeo::linear(a, 2)) == JetDiffeo::linear(a, 3));
  CHECK(section_sk(JetDiffeo(oracle::series({1, 1}))) == oracle::series({1, 1, 1}));
}

TEST_CASE("alpha cocycle examples") {
  Sampler s(23);
  auto g = from_chart_g31(s.g31(), R);
  CHECK(alpha_cocycle(JetDiffeo::identity(1, 3, R), g).is_zero());
  CHECK(alpha_cocycle(g, JetDiffeo::identity(1, 3, R)).is_zero());
  for (int n = 0; n < 20; ++n) {
    auto a = s.g31(), b = s.g31();
    auto v = alpha_cocycle(from_chart_g31(a, R), from_chart_g31(b, R));
    CHECK(v.min_degree() == 4);
    CHECK(v.max_degree() == 4);
    CHECK(v.coeff(0, MultiIndex({4})) == Q(1, 2) * (b.a1 * a.a2 / a.a0 - a.a1 * b.a2 / (a.a0 * a.a0)));
  }
}

TEST_CASE("closed form for the order-4 cocycle") {
  // The literal expression, and the cocycle in the library's composition order.
  CHECK(e41_printed_form(g31(1, 0, 1), g31(0, 1, 1)) == Q(1, 2));
  CHECK(e41_printed_form(g31(0, 1, 1), g31(1, 0, 1)) == Q(-1, 2));
  CHECK(e41_closed_form(g31(1, 0, 1), g31(0, 1, 1)) == Q(-1, 2));
  CHECK(e41_closed_form(g31(0, 1, 1), g31(1, 0, 1)) == Q(1, 2));
  CHECK(e41_closed_form(g31(0, 0, 1), g31(3, -2, 5)).is_zero());
  Sampler s(24);
  for (int n = 0; n < 20; ++n) {
    G31Coords a{s.scalar(), s.scalar(), Q(1)}, b{s.scalar(), s.scalar(), Q(1)};
    CHECK(e41_printed_form(a, b) == -e41_closed_form(a, b));
  }
}

TEST_CASE("gl_action examples") {
  Sampler s(25);
  auto v = s.polyvector(2, 3, 3);
  CHECK(gl_action(Matrix::identity(2, R), v) == v);
  for (int d = 1; d <= 4; ++d) {
    Scalar lambda = Q(3, 2), c = Q(-5, 7);
    Matrix a(1, 1, R);
    a(0, 0) = lambda;
    CHECK(gl_action(a, t_field(d, c)) == t_field(d, lambda.pow(1 - d) * c));
  }
  Matrix two(1, 1, R);
  two(0, 0) = Q(2);
  CHECK(gl_action(two, t_field(4, Q(1))) == t_field(4, Q(1, 8)));
}

TEST_CASE("dilation homotopy examples") {
  auto g = JetDiffeo(oracle::series({1, 1}));
  CHECK(dilation_homotopy(Q(1), g) == g);
  CHECK(dilation_homotopy(Q(0), g).is_identity());
  CHECK(dilation_homotopy(Q(1, 2), exp_jet(t_field(2, Q(1)), 2)) == exp_jet(t_field(2, Q(1, 2)), 2));
}

TEST_CASE("G31 chart examples") {
  CHECK(chart_g31(JetDiffeo::identity(1, 3, R)) == g31(0, 0, 1));
  auto a = from_chart_g31(g31(1, 0, 2), R), b = from_chart_g31(g31(1, 0, 1), R);
  CHECK(chart_g31(compose(a, b)) == G31Coords{Q(3, 2), Q(0), Q(2)});
  auto comm = compose(compose(a, b), compose(invert(a), invert(b)));
  CHECK(chart_g31(comm) == G31Coords{Q(-1, 2), Q(0), Q(1)});
  // inverse formula (-a0 a1, -a0^2 a2, 1/a0)
  auto c = G31Coords{Q(2, 3), Q(-1, 5), Q(-3, 2)};
  CHECK(chart_g31(invert(from_chart_g31(c, R))) == G31Coords{-c.a0 * c.a1, -c.a0 * c.a0 * c.a2, c.a0.inverse()});
}

TEST_CASE("G31 product law on random pairs") {
  Sampler s(26);
  for (int n = 0; n < 100; ++n) {
    auto a = s.g31(), b = s.g31();
    auto prod = oracle::compose(from_chart_g31(a, R), from_chart_g31(b, R));
    CHECK(chart_g31(JetDiffeo(prod)) == law(a, b));
    CHECK(g31_product(a, b) == law(a, b));
  }
}

TEST_CASE("G2l chart examples and law") {
  for (int l = 1; l <= 3; ++l) {
    auto id = chart_g2l(JetDiffeo::identity(l, 2, R));
    CHECK(id.k.is_zero());
    CHECK(id.a == Matrix::identity(static_cast<std::size_t>(l), R));
  }
  Sampler s(27);
  for (int n = 0; n < 30; ++n) {
    const int l = s.integer(1, 3);
    auto k1 = s.polyvector(l, 2, 2), k2 = s.polyvector(l, 2, 2);
    auto i = Matrix::identity(static_cast<std::size_t>(l), R);
    auto u = chart_g2l(compose(from_chart_g2l({k1, i}), from_chart_g2l({k2, i})));
    CHECK(u.k == k1 + k2);
    CHECK(u.a == i);
    auto a = s.invertible_matrix(l);
    auto semi = chart_g2l(compose(from_chart_g2l({PolyVector::zero(l, 2, 2, R), a}), from_chart_g2l({k2, i})));
    CHECK(semi.k == gl_action(a, k2));
    CHECK(semi.a == a);
    // A(K) as a substitution: x -> A K(A^{-1} x)
    auto ainv = *inverse(a);
    auto sandwich = oracle::compose(oracle::compose(JetMap::linear(a, 2), identity_plus(k2, 2)),
                                    JetMap::linear(ainv, 2));
    CHECK(minus_identity(sandwich, 2, 2) == gl_action(a, k2));
  }
}

TEST_CASE("exp and log are mutually inverse") {
  Sampler s(28);
  for (int l = 1; l <= 3; ++l)
    for (int k = 2; k <= 5; ++k)
      for (int n = 0; n < 3; ++n) {
        auto x = s.polyvector(l, 2, k, 0.3);
        CHECK(log_jet(exp_jet(x, k)) == x);
        auto u = s.unipotent(l, k, 0.3);
        CHECK(exp_jet(log_jet(u), k) == u);
      }
}

TEST_CASE("exp is additive on abelian layers") {
  Sampler s(29);
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n < 20; ++n) {
      auto x = s.polyvector(1, 2, k), y = s.polyvector(1, 2, k);
      CHECK(compose(exp_jet(x, k), exp_jet(y, k)) == exp_jet(x + y, k));
    }
}

TEST_CASE("bracket antisymmetry and Jacobi") {
  Sampler s(30);
  for (int n = 0; n < 15; ++n) {
    const int l = s.integer(1, 3);
    auto x = s.polyvector(l, 2, 2), y = s.polyvector(l, 2, 3), z = s.polyvector(l, 1, 2);
    CHECK(bracket(x, y) == -bracket(y, x));
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("group commutator has the bracket as leading term") {
  // Degrees 2 and 3 at order 4: [X,[X,Y]] and [Y,[X,Y]] vanish, so the
  // commutator is exactly exp of a bracket. With f∘g applying g first the
  // word exp(X) exp(Y) exp(-X) exp(-Y) gives -[X,Y].
  Sampler s(31);
  for (int n = 0; n < 10; ++n) {
    auto x = s.polyvector(1, 2, 2), y = s.polyvector(1, 3, 3);
    auto ex = exp_jet(x.with_degrees(2, 4), 4), ey = exp_jet(y.with_degrees(2, 4), 4);
    auto word = compose(compose(ex, ey), compose(invert(ex), invert(ey)));
    CHECK(log_jet(word) == (-bracket(x, y, 4)).with_degrees(2, 4));
    auto inverted = compose(compose(invert(ex), invert(ey)), compose(ex, ey));
    CHECK(log_jet(inverted) == (-bracket(x, y, 4)).with_degrees(2, 4));
    auto swapped = compose(compose(ey, ex), compose(invert(ey), invert(ex)));
    CHECK(log_jet(swapped) == bracket(x, y, 4).with_degrees(2, 4));
  }
}

TEST_CASE("section, Levy and dilation properties") {
  Sampler s(32);
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 4; ++k) {
      auto g = s.jet(l, k), h = s.jet(l, k);
      CHECK(truncate(section_sk(g), k) == g);
      CHECK(truncate(section_polynomial(g), k) == g);
      CHECK(levy_compose(levy_decompose(g), k) == g);
      Scalar t = Q(s.integer(0, 6), s.integer(1, 3));
      CHECK(dilation_homotopy(t, compose(g, h)) == compose(dilation_homotopy(t, g), dilation_homotopy(t, h)));
      if (k < 4) {
        auto v = alpha_cocycle(g, h);
        CHECK(v.min_degree() == k + 1);
        CHECK(v.max_degree() == k + 1);
      }
    }
}

TEST_CASE("section is exp-coordinate padding, not coefficient padding") {
  auto g = from_chart_g31(G31Coords{Q(1), Q(2), Q(1)}, R);
  CHECK(section_sk(g) != section_polynomial(g));
  CHECK(log_jet(section_sk(g)).homogeneous_part(4).is_zero());
}
