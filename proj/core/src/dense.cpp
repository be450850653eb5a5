#include "dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetfol::detail {

Layout::Layout(int l, int k) : l_(l), k_(k) {
  if (l < 1 || k < 0) throw std::invalid_argument("bad layout dimensions");
  int cells = 1;
  for (int i = 0; i < l; ++i) {
    if (cells > (1 << 22) / (k + 1)) throw std::invalid_argument("jet dimensions too large");
    cells *= k + 1;
  }
  key_.assign(static_cast<std::size_t>(cells), -1);
  for (int d = 0; d <= k; ++d) {
    first_.push_back(size());
    for (auto& m : monomials_of_degree(l, d)) {
      key_[static_cast<std::size_t>(key(m.exps()))] = size();
      monos_.push_back(std::move(m));
      deg_.push_back(d);
    }
  }
  first_.push_back(size());

  const int n = size();
  lower_.assign(static_cast<std::size_t>(n * l), -1);
  std::vector<int> e(static_cast<std::size_t>(l));
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < l; ++j) {
      if (monos_[static_cast<std::size_t>(a)][j] == 0) continue;
      auto ex = monos_[static_cast<std::size_t>(a)].exps();
      std::copy(ex.begin(), ex.end(), e.begin());
      --e[static_cast<std::size_t>(j)];
      lower_[static_cast<std::size_t>(a * l + j)] = key_[static_cast<std::size_t>(key(e))];
    }

  mul_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    auto ea = monos_[static_cast<std::size_t>(a)].exps();
    for (int b = 0; b < first_[static_cast<std::size_t>(k - deg_[static_cast<std::size_t>(a)] + 1)]; ++b) {
      auto eb = monos_[static_cast<std::size_t>(b)].exps();
      for (int j = 0; j < l; ++j) e[static_cast<std::size_t>(j)] = ea[static_cast<std::size_t>(j)] + eb[static_cast<std::size_t>(j)];
      mul_[static_cast<std::size_t>(a)].emplace_back(b, key_[static_cast<std::size_t>(key(e))]);
    }
  }
}

int Layout::key(std::span<const int> e) const {
  int key = 0;
  for (int j = l_ - 1; j >= 0; --j) key = key * (k_ + 1) + e[static_cast<std::size_t>(j)];
  return key;
}

int Layout::index(const MultiIndex& m) const {
  if (m.size() != l_) throw std::invalid_argument("multi-index size does not match codimension");
  if (m.weight() > k_) return -1;
  return key_[static_cast<std::size_t>(key(m.exps()))];
}

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
double lcm(double, double) { return 1.0; }

void rescale(std::vector<mpz_class>& num, const mpz_class& from, const mpz_class& to) {
  if (from == to) return;
  mpz_class f;
  mpz_divexact(f.get_mpz_t(), to.get_mpz_t(), from.get_mpz_t());
  for (auto& x : num)
    if (sgn(x)) x *= f;
}
void rescale(std::vector<double>&, double, double) {}

void divide(Poly<mpz_class>& p, long n) { p.den *= n; }
void divide(Poly<double>& p, long n) {
  for (auto& x : p.num) x /= static_cast<double>(n);
}

template <class T>
T read(const Scalar& s, const T& den);
template <>
mpz_class read(const Scalar& s, const mpz_class& den) {
  const mpq_class& q = s.q();
  mpz_class f;
  mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  return q.get_num() * f;
}
template <>
double read(const Scalar& s, const double&) {
  return s.d();
}

Scalar write(const mpz_class& num, const mpz_class& den) { return Scalar::rational(mpq_class(num, den)); }
Scalar write(double num, double) { return Scalar::real(num); }

template <class T>
T denominator_of(const Coeffs& c);
template <>
mpz_class denominator_of(const Coeffs& c) {
  mpz_class d = 1;
  for (const auto& [t, s] : c) d = lcm(d, mpz_class(s.q().get_den()));
  return d;
}
template <>
double denominator_of(const Coeffs&) {
  return 1.0;
}

template <class T>
std::vector<T> multiply(const Layout& lay, const std::vector<T>& p, const std::vector<T>& q, int from = 0) {
  std::vector<T> r(static_cast<std::size_t>(lay.size()), T(0));
  for (int a = from; a < lay.size(); ++a) {
    const T& pa = p[static_cast<std::size_t>(a)];
    if (is_nil(pa)) continue;
    for (auto [b, c] : lay.products(a)) {
      const T& qb = q[static_cast<std::size_t>(b)];
      if (!is_nil(qb)) addmul(r[static_cast<std::size_t>(c)], pa, qb);
    }
  }
  return r;
}

// x(p) = sum_j x_j * dp/dx_j, denominator x.den * p.den.
template <class T>
Poly<T> lie(const Layout& lay, const DenseMap<T>& x, const Poly<T>& p) {
  const auto n = static_cast<std::size_t>(lay.size());
  Poly<T> r{std::vector<T>(n, T(0)), x.den * p.den};
  std::vector<T> dp(n);
  for (int j = 0; j < lay.l(); ++j) {
    std::fill(dp.begin(), dp.end(), T(0));
    bool any = false;
    for (int a = 1; a < lay.size(); ++a) {
      int b = lay.lower(a, j);
      if (b < 0 || is_nil(p.num[static_cast<std::size_t>(a)])) continue;
      dp[static_cast<std::size_t>(b)] = p.num[static_cast<std::size_t>(a)] * lay.mono(a)[j];
      any = true;
    }
    if (!any) continue;
    auto term = multiply(lay, x.comp[static_cast<std::size_t>(j)], dp);
    for (std::size_t c = 0; c < n; ++c)
      if (!is_nil(term[c])) r.num[c] += term[c];
  }
  return r;
}

template <class T>
void accumulate(Poly<T>& acc, Poly<T> t) {
  T d = lcm(acc.den, t.den);
  rescale(acc.num, acc.den, d);
  rescale(t.num, t.den, d);
  acc.den = d;
  for (std::size_t i = 0; i < acc.num.size(); ++i)
    if (!is_nil(t.num[i])) acc.num[i] += t.num[i];
}

template <class T>
bool all_nil(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return is_nil(x); });
}

}  // namespace

template <class T>
DenseMap<T> load(const Layout& lay, const Coeffs& c) {
  DenseMap<T> m{std::vector<std::vector<T>>(static_cast<std::size_t>(lay.l()),
                                            std::vector<T>(static_cast<std::size_t>(lay.size()), T(0))),
                denominator_of<T>(c)};
  for (const auto& [t, s] : c) {
    int a = lay.index(t.index);
    if (a < 0) continue;
    m.comp[static_cast<std::size_t>(t.component)][static_cast<std::size_t>(a)] = read<T>(s, m.den);
  }
  return m;
}

template <class T>
Coeffs store(const Layout& lay, const DenseMap<T>& m, int min_degree, int max_degree) {
  Coeffs out;
  int hi = std::min(max_degree, lay.k());
  for (int i = 0; i < lay.l(); ++i)
    for (int a = lay.first_of_degree(std::max(min_degree, 0)); a < lay.first_of_degree(hi + 1); ++a) {
      const T& x = m.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
      if (!is_nil(x)) out.emplace_hint(out.end(), Term{i, lay.mono(a)}, write(x, m.den));
    }
  return out;
}

template <class T>
DenseMap<T> compose(const Layout& lay, const DenseMap<T>& f, const DenseMap<T>& g) {
  const int n = lay.size(), k = lay.k();
  int top = 0;
  for (const auto& c : f.comp)
    for (int a = 1; a < n; ++a)
      if (!is_nil(c[static_cast<std::size_t>(a)])) top = std::max(top, lay.degree(a));

  // powers[a] = g^{mono(a)}, denominator g.den^{|a|}
  std::vector<std::vector<T>> powers(static_cast<std::size_t>(lay.first_of_degree(top + 1)));
  for (int a = lay.first_of_degree(1); a < lay.first_of_degree(top + 1); ++a) {
    int j = 0;
    while (lay.mono(a)[j] == 0) ++j;
    const auto& gj = g.comp[static_cast<std::size_t>(j)];
    if (lay.degree(a) == 1)
      powers[static_cast<std::size_t>(a)] = gj;
    else
      powers[static_cast<std::size_t>(a)] =
          multiply(lay, powers[static_cast<std::size_t>(lay.lower(a, j))], gj, lay.first_of_degree(lay.degree(a) - 1));
  }

  std::vector<T> dpow(static_cast<std::size_t>(k + 1), T(1));
  for (int i = 1; i <= k; ++i) dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * g.den;

  DenseMap<T> r{std::vector<std::vector<T>>(f.comp.size(), std::vector<T>(static_cast<std::size_t>(n), T(0))),
                f.den * dpow[static_cast<std::size_t>(k)]};
  for (std::size_t c = 0; c < f.comp.size(); ++c)
    for (int a = 1; a < lay.first_of_degree(top + 1); ++a) {
      const T& fa = f.comp[c][static_cast<std::size_t>(a)];
      if (is_nil(fa)) continue;
      T w = fa * dpow[static_cast<std::size_t>(k - lay.degree(a))];
      const auto& pa = powers[static_cast<std::size_t>(a)];
      for (int x = lay.first_of_degree(lay.degree(a)); x < n; ++x)
        if (!is_nil(pa[static_cast<std::size_t>(x)])) addmul(r.comp[c][static_cast<std::size_t>(x)], w, pa[static_cast<std::size_t>(x)]);
    }
  return r;
}

template <class T>
DenseMap<T> flow(const Layout& lay, const DenseMap<T>& x) {
  const auto n = static_cast<std::size_t>(lay.size());
  std::vector<Poly<T>> parts;
  for (int i = 0; i < lay.l(); ++i) {
    Poly<T> term{std::vector<T>(n, T(0)), T(1)};
    term.num[static_cast<std::size_t>(lay.index(MultiIndex::unit(lay.l(), i)))] = T(1);
    Poly<T> acc = term;
    for (int step = 1; step < lay.k(); ++step) {
      term = lie(lay, x, term);
      if (all_nil(term.num)) break;
      divide(term, step);
      accumulate(acc, term);
    }
    parts.push_back(std::move(acc));
  }
  T d(1);
  for (const auto& p : parts) d = lcm(d, p.den);
  DenseMap<T> r{{}, d};
  for (auto& p : parts) {
    rescale(p.num, p.den, d);
    r.comp.push_back(std::move(p.num));
  }
  return r;
}

template <class T>
DenseMap<T> bracket(const Layout& lay, const DenseMap<T>& x, const DenseMap<T>& y) {
  DenseMap<T> r{{}, x.den * y.den};
  for (int i = 0; i < lay.l(); ++i) {
    auto a = lie(lay, x, Poly<T>{y.comp[static_cast<std::size_t>(i)], y.den});
    auto b = lie(lay, y, Poly<T>{x.comp[static_cast<std::size_t>(i)], x.den});
    for (std::size_t c = 0; c < a.num.size(); ++c) a.num[c] -= b.num[c];
    r.comp.push_back(std::move(a.num));
  }
  return r;
}

template DenseMap<mpz_class> load(const Layout&, const Coeffs&);
template DenseMap<double> load(const Layout&, const Coeffs&);
template Coeffs store(const Layout&, const DenseMap<mpz_class>&, int, int);
template Coeffs store(const Layout&, const DenseMap<double>&, int, int);
template DenseMap<mpz_class> compose(const Layout&, const DenseMap<mpz_class>&, const DenseMap<mpz_class>&);
template DenseMap<double> compose(const Layout&, const DenseMap<double>&, const DenseMap<double>&);
template DenseMap<mpz_class> flow(const Layout&, const DenseMap<mpz_class>&);
template DenseMap<double> flow(const Layout&, const DenseMap<double>&);
template DenseMap<mpz_class> bracket(const Layout&, const DenseMap<mpz_class>&, const DenseMap<mpz_class>&);
template DenseMap<double> bracket(const Layout&, const DenseMap<double>&, const DenseMap<double>&);

}  // namespace jetfol::detail
