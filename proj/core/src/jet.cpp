#include "jetfol/jet.hpp"

#include <sstream>
#include <stdexcept>

#include "dense.hpp"

namespace jetfol {

namespace {

void check_dims(int l, int k) {
  if (l < 1) throw std::invalid_argument("codimension l must be at least 1");
  if (k < 1) throw std::invalid_argument("jet order k must be at least 1");
}

void check_terms(Coeffs& c, int l, int lo, int hi, Field f, const char* what) {
  for (auto it = c.begin(); it != c.end();) {
    const auto& [t, s] = *it;
    if (t.component < 0 || t.component >= l || t.index.size() != l)
      throw std::invalid_argument(std::string(what) + ": term does not match codimension");
    int w = t.index.weight();
    if (w < lo || w > hi)
      throw std::invalid_argument(std::string(what) + ": term of weight " + std::to_string(w) + " outside [" +
                                  std::to_string(lo) + "," + std::to_string(hi) + "]");
    if (s.field() != f) throw FieldMismatch();
    it = s.is_zero() ? c.erase(it) : std::next(it);
  }
}

std::string render(const Coeffs& c, int l) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, s] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s << ")";
    if (t.index.weight() > 0) os << "*" << t.index.str();
    os << (l == 1 ? "*dt" : "*d" + std::to_string(t.component + 1));
  }
  return os.str();
}

template <class T>
Coeffs compose_impl(const JetMap& f, const JetMap& g) {
  detail::Layout lay(f.l(), f.k());
  auto r = detail::compose(lay, detail::load<T>(lay, f.coeffs()), detail::load<T>(lay, g.coeffs()));
  return detail::store(lay, r, 1, f.k());
}

}  // namespace

JetMap::JetMap(int l, int k, Field f, Coeffs coeffs) : l_(l), k_(k), field_(f), coeffs_(std::move(coeffs)) {
  check_dims(l, k);
  check_terms(coeffs_, l, 1, k, f, "jet");
}

JetMap JetMap::identity(int l, int k, Field f) {
  check_dims(l, k);
  Coeffs c;
  for (int i = 0; i < l; ++i) c.emplace(Term{i, MultiIndex::unit(l, i)}, Scalar::one(f));
  return JetMap(l, k, f, std::move(c));
}

JetMap JetMap::linear(const Matrix& a, int k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("linear jet needs a square matrix");
  const int l = static_cast<int>(a.rows());
  check_dims(l, k);
  Coeffs c;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (!a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
        c.emplace(Term{i, MultiIndex::unit(l, j)}, a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return JetMap(l, k, a.field(), std::move(c));
}

Scalar JetMap::coeff(int component, const MultiIndex& j) const {
  auto it = coeffs_.find(Term{component, j});
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

Matrix JetMap::linear_part() const {
  Matrix m(static_cast<std::size_t>(l_), static_cast<std::size_t>(l_), field_);
  for (const auto& [t, s] : coeffs_) {
    if (t.index.weight() != 1) continue;
    int j = 0;
    while (t.index[j] == 0) ++j;
    m(static_cast<std::size_t>(t.component), static_cast<std::size_t>(j)) = s;
  }
  return m;
}

bool JetMap::is_identity() const { return *this == identity(l_, k_, field_); }

int JetMap::top_degree() const {
  int d = 0;
  for (const auto& [t, s] : coeffs_) d = std::max(d, t.index.weight());
  return d;
}

std::string JetMap::str() const {
  // Components listed as x_i -> polynomial.
  std::ostringstream os;
  for (int i = 0; i < l_; ++i) {
    if (i) os << "; ";
    os << (l_ == 1 ? std::string("t") : "x" + std::to_string(i + 1)) << " -> ";
    bool first = true;
    for (const auto& [t, s] : coeffs_) {
      if (t.component != i) continue;
      os << (first ? "" : " + ") << "(" << s << ")*" << t.index.str();
      first = false;
    }
    if (first) os << "0";
  }
  return os.str();
}

JetDiffeo::JetDiffeo(JetMap m) : JetMap(std::move(m)) {
  if (determinant(linear_part()).is_zero()) throw std::domain_error("jet has a singular linear part");
}

JetMap compose(const JetMap& f, const JetMap& g) {
  if (f.l() != g.l() || f.k() != g.k())
    throw std::invalid_argument("compose: dimension/order mismatch (" + std::to_string(f.l()) + "," +
                                std::to_string(f.k()) + ") vs (" + std::to_string(g.l()) + "," +
                                std::to_string(g.k()) + ")");
  if (f.field() != g.field()) throw FieldMismatch();
  Coeffs c = f.field() == Field::rational ? compose_impl<mpz_class>(f, g) : compose_impl<double>(f, g);
  return JetMap(f.l(), f.k(), f.field(), std::move(c));
}

JetDiffeo compose(const JetDiffeo& f, const JetDiffeo& g) {
  return JetDiffeo(compose(static_cast<const JetMap&>(f), static_cast<const JetMap&>(g)));
}

JetDiffeo invert(const JetDiffeo& f) {
  auto linv = inverse(f.linear_part());
  if (!linv) throw std::domain_error("invert: singular linear part");
  const JetMap lin_inv = JetMap::linear(*linv, f.k());
  Coeffs nonlinear;
  for (const auto& [t, s] : f.coeffs())
    if (t.index.weight() >= 2) nonlinear.emplace(t, s);
  const JetMap n(f.l(), f.k(), f.field(), std::move(nonlinear));
  const JetMap id = JetMap::identity(f.l(), f.k(), f.field());

  // h <- L^{-1}(x - N(h)); each pass fixes one more weight.
  JetMap h = lin_inv;
  for (int pass = 1; pass < f.k() && !n.coeffs().empty(); ++pass) {
    Coeffs rhs = id.coeffs();
    const JetMap nh = compose(n, h);
    for (const auto& [t, s] : nh.coeffs()) {
      auto [it, fresh] = rhs.emplace(t, -s);
      if (!fresh) it->second -= s;
    }
    h = compose(lin_inv, JetMap(f.l(), f.k(), f.field(), std::move(rhs)));
  }
  return JetDiffeo(std::move(h));
}

JetMap truncate(const JetMap& f, int k2) {
  if (k2 < 1 || k2 > f.k())
    throw std::invalid_argument("truncate: order " + std::to_string(k2) + " outside [1," + std::to_string(f.k()) + "]");
  Coeffs c;
  for (const auto& [t, s] : f.coeffs())
    if (t.index.weight() <= k2) c.emplace(t, s);
  return JetMap(f.l(), k2, f.field(), std::move(c));
}

JetDiffeo truncate(const JetDiffeo& f, int k2) { return JetDiffeo(truncate(static_cast<const JetMap&>(f), k2)); }

JetMap extend_order(const JetMap& f, int k2) {
  if (k2 < f.k()) throw std::invalid_argument("extend_order: target order below current order");
  return JetMap(f.l(), k2, f.field(), f.coeffs());
}

JetDiffeo extend_order(const JetDiffeo& f, int k2) {
  return JetDiffeo(extend_order(static_cast<const JetMap&>(f), k2));
}

PolyVector::PolyVector(int l, int min_degree, int max_degree, Field f, Coeffs coeffs)
    : l_(l), min_(min_degree), max_(max_degree), field_(f), coeffs_(std::move(coeffs)) {
  if (l < 1) throw std::invalid_argument("codimension l must be at least 1");
  if (min_degree < 1 || max_degree < min_degree)
    throw std::invalid_argument("polyvector degree bounds must satisfy 1 <= min <= max");
  check_terms(coeffs_, l, min_degree, max_degree, f, "polyvector");
}

PolyVector PolyVector::monomial(int l, int component, const MultiIndex& j, const Scalar& c) {
  return PolyVector(l, j.weight(), j.weight(), c.field(), Coeffs{{Term{component, j}, c}});
}

Scalar PolyVector::coeff(int component, const MultiIndex& j) const {
  auto it = coeffs_.find(Term{component, j});
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

PolyVector PolyVector::homogeneous_part(int degree) const {
  Coeffs c;
  for (const auto& [t, s] : coeffs_)
    if (t.index.weight() == degree) c.emplace(t, s);
  return PolyVector(l_, degree, degree, field_, std::move(c));
}

PolyVector PolyVector::with_degrees(int min_degree, int max_degree) const {
  Coeffs c;
  for (const auto& [t, s] : coeffs_)
    if (t.index.weight() >= min_degree && t.index.weight() <= max_degree) c.emplace(t, s);
  return PolyVector(l_, min_degree, max_degree, field_, std::move(c));
}

Vector PolyVector::coordinates(int degree) const {
  auto basis = module_basis(l_, degree);
  Vector v;
  v.reserve(basis.size());
  for (const auto& t : basis) v.push_back(coeff(t.component, t.index));
  for (const auto& [t, s] : coeffs_)
    if (t.index.weight() != degree) throw std::invalid_argument("coordinates: polyvector is not homogeneous");
  return v;
}

PolyVector PolyVector::from_coordinates(int l, int degree, const Vector& v, Field f) {
  auto basis = module_basis(l, degree);
  if (basis.size() != v.size()) throw std::invalid_argument("coordinate vector has wrong length");
  Coeffs c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) c.emplace(basis[i], v[i]);
  return PolyVector(l, degree, degree, f, std::move(c));
}

PolyVector PolyVector::operator-() const {
  PolyVector r(*this);
  for (auto& [t, s] : r.coeffs_) s = -s;
  return r;
}

void PolyVector::absorb(const PolyVector& o, bool subtract) {
  if (o.l_ != l_) throw std::invalid_argument("polyvector codimension mismatch");
  if (o.field_ != field_) throw FieldMismatch();
  min_ = std::min(min_, o.min_);
  max_ = std::max(max_, o.max_);
  for (const auto& [t, s] : o.coeffs_) {
    auto [it, fresh] = coeffs_.emplace(t, subtract ? -s : s);
    if (fresh) continue;
    if (subtract)
      it->second -= s;
    else
      it->second += s;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  absorb(o, false);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  absorb(o, true);
  return *this;
}

PolyVector& PolyVector::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch();
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [t, c] : coeffs_) c *= s;
  return *this;
}

std::string PolyVector::str() const { return render(coeffs_, l_); }

JetMap identity_plus(const PolyVector& v, int k) {
  Coeffs c = JetMap::identity(v.l(), k, v.field()).coeffs();
  for (const auto& [t, s] : v.coeffs()) {
    if (t.index.weight() > k) continue;
    auto [it, fresh] = c.emplace(t, s);
    if (!fresh) it->second += s;
  }
  return JetMap(v.l(), k, v.field(), std::move(c));
}

PolyVector minus_identity(const JetMap& f, int min_degree, int max_degree) {
  Coeffs c;
  for (const auto& [t, s] : f.coeffs()) {
    int w = t.index.weight();
    if (w < min_degree || w > max_degree) continue;
    Scalar v = s;
    if (w == 1 && t.index[t.component] == 1) v -= Scalar::one(f.field());
    if (!v.is_zero()) c.emplace(t, v);
  }
  if (min_degree <= 1)
    for (int i = 0; i < f.l(); ++i) {
      Term t{i, MultiIndex::unit(f.l(), i)};
      if (!f.coeffs().contains(t)) c.emplace(t, -Scalar::one(f.field()));
    }
  return PolyVector(f.l(), min_degree, max_degree, f.field(), std::move(c));
}

JetMap as_map(const PolyVector& v) { return JetMap(v.l(), v.max_degree(), v.field(), v.coeffs()); }

}  // namespace jetfol
