#include <doctest.h>

#include "jetfol/jet.hpp"
#include "jetfol/random.hpp"
#include "oracle.hpp"

using namespace jetfol;

namespace {

Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }

JetMap jet2(std::initializer_list<std::tuple<int, std::vector<int>, long>> terms, int k) {
  Coeffs c;
  for (const auto& [i, e, v] : terms) c.emplace(Term{i, MultiIndex(e)}, Q(v));
  return JetMap(2, k, Field::rational, c);
}

}  // namespace

TEST_CASE("scalars are canonical and never mix fields") {
  CHECK(Q(2, 4).str() == "1/2");
  CHECK(Q(3, -6).str() == "-1/2");
  CHECK(Scalar::parse(Field::rational, "0.25") == Q(1, 4));
  CHECK(Scalar::parse(Field::rational, "-6/8") == Q(-3, 4));
  CHECK_THROWS(Scalar::parse(Field::rational, "1/0"));
  CHECK_THROWS(Scalar::parse(Field::rational, "abc"));
  CHECK_THROWS_AS(Q(1) + Scalar::real(1.0), FieldMismatch);
  CHECK_FALSE(Q(1) == Scalar::real(1.0));
  auto x = Scalar::real(0.1);
  CHECK(Scalar::parse(Field::real, x.str()) == x);
}

TEST_CASE("multi-indices") {
  CHECK(MultiIndex({2, 1, 0}).weight() == 3);
  CHECK_THROWS(MultiIndex({}));
  CHECK_THROWS(MultiIndex({-1, 2}));
  CHECK(monomials_of_degree(2, 2).size() == 3);
  CHECK(module_basis(2, 2).size() == 6);
}

TEST_CASE("compose examples") {
  auto f = oracle::series({1, 1, 0}), g = oracle::series({1, 0, 1});
  CHECK(compose(f, g) == oracle::series({1, 1, 1}));
  CHECK(compose(JetMap::identity(1, 3, Field::rational), g) == g);
  // swap after (x + y^2, y)
  auto swap = jet2({{0, {0, 1}, 1}, {1, {1, 0}, 1}}, 2);
  auto h = jet2({{0, {1, 0}, 1}, {0, {0, 2}, 1}, {1, {0, 1}, 1}}, 2);
  CHECK(compose(swap, h) == jet2({{0, {0, 1}, 1}, {1, {1, 0}, 1}, {1, {0, 2}, 1}}, 2));
}

TEST_CASE("invert examples") {
  CHECK(invert(JetDiffeo::identity(2, 4, Field::rational)).is_identity());
  CHECK(invert(JetDiffeo(oracle::series({1, 1}))) == oracle::series({1, -1}));
  for (int k = 1; k <= 4; ++k) {
    std::vector<mpq_class> two(static_cast<std::size_t>(k), 0), half(static_cast<std::size_t>(k), 0);
    two[0] = 2;
    half[0] = mpq_class(1, 2);
    CHECK(invert(JetDiffeo(oracle::series(two))) == oracle::series(half));
  }
  Coeffs singular{{Term{0, MultiIndex({2})}, Q(1)}};
  CHECK_THROWS(JetDiffeo(JetMap(1, 3, Field::rational, singular)));
}

TEST_CASE("truncate examples") {
  auto f = oracle::series({1, 1, 1});
  CHECK(truncate(f, 2) == oracle::series({1, 1}));
  CHECK(truncate(f, 3) == f);
  auto a = oracle::series({1, 0, 1}), b = oracle::series({1, 1, 0});
  CHECK(truncate(compose(a, b), 2) == compose(truncate(a, 2), truncate(b, 2)));
  CHECK(truncate(compose(a, b), 2) == oracle::series({1, 1}));
}

TEST_CASE("jets reject malformed data") {
  CHECK_THROWS(JetMap(0, 2, Field::rational));
  CHECK_THROWS(JetMap(1, 2, Field::rational, Coeffs{{Term{0, MultiIndex({3})}, Q(1)}}));
  CHECK_THROWS(JetMap(1, 2, Field::rational, Coeffs{{Term{0, MultiIndex({0})}, Q(1)}}));
  CHECK_THROWS(JetMap(1, 2, Field::rational, Coeffs{{Term{0, MultiIndex({1})}, Scalar::real(1)}}));
  // zero coefficients are dropped on construction
  CHECK(JetMap(1, 2, Field::rational, Coeffs{{Term{0, MultiIndex({2})}, Q(0)}}).coeffs().empty());
}

TEST_CASE("composition agrees with schoolbook substitution") {
  Sampler s(11);
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 4; ++k)
      for (int n = 0; n < 5; ++n) {
        auto f = s.jet(l, k), g = s.jet(l, k);
        CHECK(compose(f, g) == oracle::compose(f, g));
      }
}

TEST_CASE("group axioms on random jets") {
  Sampler s(12);
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 5; ++k)
      for (int n = 0; n < 4; ++n) {
        auto f = s.jet(l, k), g = s.jet(l, k), h = s.jet(l, k);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        auto fi = invert(f);
        CHECK(oracle::compose(f, fi) == JetMap::identity(l, k, Field::rational));
        CHECK(oracle::compose(fi, f) == JetMap::identity(l, k, Field::rational));
        for (int k2 = 1; k2 <= k; ++k2) CHECK(truncate(compose(f, g), k2) == compose(truncate(f, k2), truncate(g, k2)));
      }
}

TEST_CASE("float jets compose and invert within rounding") {
  Sampler s(13, Field::real, 1);
  auto f = s.jet(2, 3), fi = invert(f);
  auto id = compose(f, fi);
  for (const auto& [t, c] : id.coeffs()) {
    const double expect = (t.index.weight() == 1 && t.index[t.component] == 1) ? 1.0 : 0.0;
    CHECK(std::abs(c.d() - expect) < 1e-9);
  }
}

TEST_CASE("kernel_basis examples") {
  auto row = Matrix::from_rows({{Q(1), Q(-1)}}, Field::rational);
  auto k1 = kernel_basis(row);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vector{Q(1), Q(1)});
  CHECK(kernel_basis(Matrix::identity(2, Field::rational)).empty());
  auto m = Matrix::from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}}, Field::rational);
  auto k2 = kernel_basis(m);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0][0] == Q(-2) * k2[0][1]);
  CHECK(is_zero(m * k2[0]));
}

TEST_CASE("solve_affine examples") {
  CHECK_FALSE(solve_affine(Matrix(1, 1, Field::rational), {Q(1)}).has_value());
  auto id = solve_affine(Matrix::identity(3, Field::rational), {Q(1, 3), Q(-2), Q(5)});
  REQUIRE(id);
  CHECK(id->particular == Vector{Q(1, 3), Q(-2), Q(5)});
  CHECK(id->kernel.empty());
  auto s = solve_affine(Matrix::from_rows({{Q(1), Q(1)}}, Field::rational), {Q(2)});
  REQUIRE(s);
  CHECK(s->particular == Vector{Q(2), Q(0)});
  REQUIRE(s->kernel.size() == 1);
  CHECK(s->kernel[0][0] == -s->kernel[0][1]);
}

TEST_CASE("linear algebra properties on random systems") {
  Sampler s(14);
  for (int n = 0; n < 30; ++n) {
    const auto r = static_cast<std::size_t>(s.integer(1, 5)), c = static_cast<std::size_t>(s.integer(1, 5));
    Matrix m(r, c, Field::rational);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = s.integer(0, 2) ? s.scalar() : Q(0);
    auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    auto b = s.scalars(r);
    auto res = solve_or_certify(m, b);
    if (auto* sol = std::get_if<AffineSolution>(&res)) {
      CHECK(m * sol->particular == b);
    } else {
      const auto& cert = std::get<InfeasibilityCertificate>(res);
      CHECK(is_zero(m.transpose() * cert.row_combination));
      CHECK(dot(cert.row_combination, b) == cert.residual);
      CHECK_FALSE(cert.residual.is_zero());
    }
  }
}

TEST_CASE("float rref treats tiny pivots as zero") {
  Matrix m(2, 2, Field::real);
  m(0, 0) = Scalar::real(1);
  m(0, 1) = Scalar::real(1);
  m(1, 0) = Scalar::real(1);
  m(1, 1) = Scalar::real(1 + 1e-14);
  CHECK(rank(m) == 1);
}

TEST_CASE("polyvector coordinates round trip") {
  Sampler s(15);
  for (int l = 1; l <= 3; ++l)
    for (int d = 1; d <= 3; ++d) {
      auto v = s.polyvector(l, d, d);
      CHECK(PolyVector::from_coordinates(l, d, v.coordinates(d), Field::rational) == v);
    }
}
