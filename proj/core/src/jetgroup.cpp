#include "jetfol/jetgroup.hpp"

#include <stdexcept>

#include "dense.hpp"

namespace jetfol {

namespace {

template <class T>
Coeffs flow_impl(const PolyVector& x, int k) {
  detail::Layout lay(x.l(), k);
  return detail::store(lay, detail::flow(lay, detail::load<T>(lay, x.coeffs())), 1, k);
}

template <class T>
Coeffs bracket_impl(const PolyVector& x, const PolyVector& y, int lo, int hi) {
  detail::Layout lay(x.l(), hi);
  auto r = detail::bracket(lay, detail::load<T>(lay, x.coeffs()), detail::load<T>(lay, y.coeffs()));
  return detail::store(lay, r, lo, hi);
}

Matrix checked_inverse(const Matrix& a) {
  auto inv = inverse(a);
  if (!inv) throw std::domain_error("singular linear part");
  return *inv;
}

Scalar half(Field f) { return Scalar::one(f) / Scalar(f, 2); }

}  // namespace

JetDiffeo exp_jet(const PolyVector& x, int k) {
  if (k < 1) throw std::invalid_argument("exp_jet: order must be at least 1");
  for (const auto& [t, s] : x.coeffs()) {
    int w = t.index.weight();
    if (w < 2) throw std::invalid_argument("exp_jet: vector field has terms of weight below 2");
    if (w > k) throw std::invalid_argument("exp_jet: vector field has terms above the jet order");
  }
  Coeffs c = x.field() == Field::rational ? flow_impl<mpz_class>(x, k) : flow_impl<double>(x, k);
  return JetDiffeo(JetMap(x.l(), k, x.field(), std::move(c)));
}

PolyVector log_jet(const JetMap& u) {
  const int l = u.l(), k = u.k();
  const Field f = u.field();
  if (u.linear_part() != Matrix::identity(static_cast<std::size_t>(l), f))
    throw std::invalid_argument("log_jet: linear part is not the identity");
  PolyVector x = PolyVector::zero(l, 2, std::max(k, 2), f);
  for (int d = 2; d <= k; ++d) {
    auto e = exp_jet(x, k);
    x += minus_identity(u, d, d) - minus_identity(e, d, d);
  }
  return x.with_degrees(2, std::max(k, 2));
}

PolyVector bracket(const PolyVector& x, const PolyVector& y, std::optional<int> max_degree) {
  if (x.l() != y.l()) throw std::invalid_argument("bracket: codimension mismatch");
  if (x.field() != y.field()) throw FieldMismatch();
  int hi = max_degree.value_or(x.max_degree() + y.max_degree() - 1);
  if (hi < 1) throw std::invalid_argument("bracket: truncation degree must be at least 1");
  int lo = std::min(x.min_degree() + y.min_degree() - 1, hi);
  Coeffs c = x.field() == Field::rational ? bracket_impl<mpz_class>(x, y, lo, hi) : bracket_impl<double>(x, y, lo, hi);
  return PolyVector(x.l(), lo, hi, x.field(), std::move(c));
}

LevyCoords levy_decompose(const JetDiffeo& g) {
  Matrix a = g.linear_part();
  JetMap u = compose(static_cast<const JetMap&>(g), JetMap::linear(checked_inverse(a), g.k()));
  return LevyCoords{a, log_jet(u)};
}

JetDiffeo levy_compose(const LevyCoords& c, int k) {
  return compose(exp_jet(c.nilpotent.with_degrees(2, std::max(k, 2)), k), JetDiffeo::linear(c.linear, k));
}

JetDiffeo section_sk(const JetDiffeo& g) { return levy_compose(levy_decompose(g), g.k() + 1); }

JetDiffeo section_polynomial(const JetDiffeo& g) { return extend_order(g, g.k() + 1); }

PolyVector alpha_cocycle(const JetDiffeo& g1, const JetDiffeo& g2) {
  if (g1.k() != g2.k() || g1.l() != g2.l()) throw std::invalid_argument("alpha_cocycle: order mismatch");
  const int k = g1.k();
  auto r = compose(compose(section_sk(g1), section_sk(g2)), invert(section_sk(compose(g1, g2))));
  auto dev = minus_identity(r, 1, k + 1);
  for (const auto& [t, s] : dev.coeffs())
    if (t.index.weight() != k + 1) throw std::logic_error("alpha_cocycle: deviation below the top layer");
  return dev.with_degrees(k + 1, k + 1);
}

PolyVector gl_action(const Matrix& a, const PolyVector& v) {
  if (a.rows() != static_cast<std::size_t>(v.l()) || a.cols() != a.rows())
    throw std::invalid_argument("gl_action: matrix does not match codimension");
  Matrix ainv = checked_inverse(a);
  const int k = v.max_degree();
  auto m = compose(JetMap::linear(a, k), compose(as_map(v), JetMap::linear(ainv, k)));
  return PolyVector(v.l(), v.min_degree(), v.max_degree(), v.field(), m.coeffs());
}

JetDiffeo dilation_homotopy(const Scalar& t, const JetDiffeo& g) {
  if (t.sign() < 0) throw std::invalid_argument("dilation_homotopy: t must be non-negative");
  auto c = levy_decompose(g);
  Coeffs scaled;
  for (const auto& [term, s] : c.nilpotent.coeffs()) {
    Scalar v = s * t.pow(term.index.weight() - 1);
    if (!v.is_zero()) scaled.emplace(term, v);
  }
  c.nilpotent = PolyVector(g.l(), c.nilpotent.min_degree(), c.nilpotent.max_degree(), g.field(), std::move(scaled));
  return levy_compose(c, g.k());
}

JetDiffeo dilation_jet(const Scalar& s, int l, int k) {
  Matrix m(static_cast<std::size_t>(l), static_cast<std::size_t>(l), s.field());
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = s;
  return JetDiffeo::linear(m, k);
}

std::vector<Scalar> chart_l1(const JetDiffeo& g) {
  if (g.l() != 1) throw std::invalid_argument("codimension-1 chart needs l = 1");
  auto c = levy_decompose(g);
  std::vector<Scalar> out;
  for (int d = 2; d <= g.k(); ++d) out.push_back(c.nilpotent.coeff(0, MultiIndex({d})));
  out.push_back(c.linear(0, 0));
  return out;
}

JetDiffeo from_chart_l1(const std::vector<Scalar>& c) {
  if (c.empty()) throw std::invalid_argument("codimension-1 chart needs at least the linear coefficient");
  const int k = static_cast<int>(c.size());
  const Field f = c.back().field();
  Coeffs x;
  for (int d = 2; d <= k; ++d)
    if (!c[static_cast<std::size_t>(d - 2)].is_zero()) x.emplace(Term{0, MultiIndex({d})}, c[static_cast<std::size_t>(d - 2)]);
  Matrix a(1, 1, f);
  a(0, 0) = c.back();
  return levy_compose(LevyCoords{a, PolyVector(1, 2, std::max(k, 2), f, std::move(x))}, k);
}

G31Coords chart_g31(const JetDiffeo& g) {
  if (g.l() != 1 || g.k() != 3) throw std::invalid_argument("chart_g31 needs l = 1, k = 3");
  auto c = chart_l1(g);
  return G31Coords{c[0], c[1], c[2]};
}

JetDiffeo from_chart_g31(const G31Coords& c, Field f) {
  if (c.a1.field() != f || c.a2.field() != f || c.a0.field() != f) throw FieldMismatch();
  return from_chart_l1({c.a1, c.a2, c.a0});
}

G31Coords g31_product(const G31Coords& a, const G31Coords& b) {
  Scalar inv = a.a0.inverse();
  return G31Coords{a.a1 + inv * b.a1, a.a2 + inv * inv * b.a2, a.a0 * b.a0};
}

G31Coords g31_inverse(const G31Coords& a) {
  return G31Coords{-(a.a0 * a.a1), -(a.a0 * a.a0 * a.a2), a.a0.inverse()};
}

G2lCoords chart_g2l(const JetDiffeo& g) {
  if (g.k() != 2) throw std::invalid_argument("chart_g2l needs k = 2");
  Matrix a = g.linear_part();
  auto u = compose(static_cast<const JetMap&>(g), JetMap::linear(checked_inverse(a), 2));
  return G2lCoords{minus_identity(u, 2, 2), a};
}

JetDiffeo from_chart_g2l(const G2lCoords& c) {
  if (c.k.min_degree() != 2 || c.k.max_degree() != 2) throw std::invalid_argument("chart_g2l: K must be the weight-2 layer");
  return compose(JetDiffeo(identity_plus(c.k, 2)), JetDiffeo::linear(c.a, 2));
}

G2lCoords g2l_product(const G2lCoords& a, const G2lCoords& b) {
  return G2lCoords{a.k + gl_action(a.a, b.k), a.a * b.a};
}

Scalar e41_closed_form(const G31Coords& a, const G31Coords& b) {
  if (a.a0.is_zero() || b.a0.is_zero()) throw std::domain_error("e41: zero linear part");
  Scalar inv = a.a0.inverse();
  return half(a.a0.field()) * (inv * b.a1 * a.a2 - a.a1 * inv * inv * b.a2);
}

Scalar e41_printed_form(const G31Coords& a, const G31Coords& b) {
  if (a.a0.is_zero() || b.a0.is_zero()) throw std::domain_error("e41: zero linear part");
  Scalar inv = a.a0.inverse();
  return half(a.a0.field()) * (a.a1 * inv * b.a2 - inv * b.a1 * a.a2);
}

}  // namespace jetfol
