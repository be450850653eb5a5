#include "jetfol/cdga.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace jetfol {

namespace {

Vector axpy(Vector acc, const Scalar& a, const Vector& x) {
  if (a.is_zero()) return acc;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!x[i].is_zero()) acc[i] += a * x[i];
  return acc;
}

int koszul(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

}  // namespace

CdgaModel::CdgaModel(std::string name, std::vector<BasisElement> basis, std::vector<std::vector<Vector>> products,
                     std::vector<Vector> differential, Vector connection, Field f, bool decides_cohomology)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      products_(std::move(products)),
      differential_(std::move(differential)),
      connection_(std::move(connection)),
      field_(f),
      decides_(decides_cohomology) {
  const std::size_t n = basis_.size();
  if (n == 0) throw std::invalid_argument("model needs a nonempty basis");
  auto check_vec = [&](const Vector& v, const std::string& what) {
    if (v.size() != n) throw std::invalid_argument(what + " has wrong length");
    for (const auto& s : v)
      if (s.field() != f) throw FieldMismatch();
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (basis_[i].name == basis_[j].name) throw std::invalid_argument("duplicate basis name '" + basis_[i].name + "'");
  if (products_.size() != n) throw std::invalid_argument("product table has wrong size");
  for (auto& row : products_) {
    if (row.size() != n) throw std::invalid_argument("product table has wrong size");
    for (auto& v : row) check_vec(v, "product");
  }
  if (differential_.size() != n) throw std::invalid_argument("differential has wrong size");
  for (auto& v : differential_) check_vec(v, "differential");
  check_vec(connection_, "connection");

  auto in_block = [&](const Vector& v, int deg, int wt) {
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].is_zero() && (basis_[c].degree != deg || basis_[c].weight != wt)) return false;
    return true;
  };
  auto label = [&](std::size_t i) { return basis_[i].name; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_block(differential_[i], basis_[i].degree + 1, basis_[i].weight))
      throw std::invalid_argument("d(" + label(i) + ") is not of degree +1 and equal weight");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = products_[i][j];
      if (!in_block(p, basis_[i].degree + basis_[j].degree, basis_[i].weight + basis_[j].weight))
        throw std::invalid_argument("product " + label(i) + "*" + label(j) + " has wrong bidegree");
      Vector swapped = products_[j][i];
      if (koszul(basis_[i].degree, basis_[j].degree) < 0)
        for (auto& s : swapped) s = -s;
      if (p != swapped) throw std::invalid_argument("product " + label(i) + "*" + label(j) + " is not graded commutative");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul(products_[i][j], unit_vector(n, k, f)) != mul(unit_vector(n, i, f), products_[j][k]))
          throw std::invalid_argument("product is not associative on " + label(i) + "," + label(j) + "," + label(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(d(differential_[i]))) throw std::invalid_argument("d^2 != 0 on " + label(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = d(products_[i][j]);
      Vector rhs = mul(differential_[i], unit_vector(n, j, f));
      rhs = axpy(rhs, Scalar(f, koszul(basis_[i].degree, 1)), mul(unit_vector(n, i, f), differential_[j]));
      if (lhs != rhs) throw std::invalid_argument("Leibniz rule fails on " + label(i) + "*" + label(j));
    }
  }
  if (!is_zero(connection_)) {
    if (!in_block(connection_, 1, 0)) throw std::invalid_argument("connection form must have degree 1 and weight 0");
    if (!is_zero(d(connection_))) throw std::invalid_argument("connection form is not closed");
  }
}

bool CdgaModel::untwisted() const {
  return is_zero(connection_) &&
         std::all_of(basis_.begin(), basis_.end(), [](const BasisElement& b) { return b.weight == 0; });
}

int CdgaModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("model " + name_ + " has no basis element '" + std::string(name) + "'");
}

Vector CdgaModel::element(std::string_view name) const {
  return unit_vector(dim(), static_cast<std::size_t>(index_of(name)), field_);
}

Vector CdgaModel::mul(const Vector& x, const Vector& y) const {
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero()) out = axpy(std::move(out), x[i] * y[j], products_[i][j]);
  }
  return out;
}

Vector CdgaModel::d(const Vector& x) const {
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) out = axpy(std::move(out), x[i], differential_[i]);
  return out;
}

Vector CdgaModel::d_twisted(const Vector& x, int weight) const {
  Vector out = d(x);
  if (weight == 0 || is_zero(connection_)) return out;
  return axpy(std::move(out), Scalar(field_, weight), mul(connection_, x));
}

std::vector<int> CdgaModel::block(int degree, int weight) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].degree == degree && basis_[i].weight == weight) out.push_back(static_cast<int>(i));
  return out;
}

std::pair<int, int> CdgaModel::bidegree(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("element has wrong length for model " + name_);
  std::optional<std::pair<int, int>> bd;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    std::pair<int, int> here{basis_[i].degree, basis_[i].weight};
    if (bd && *bd != here) throw std::invalid_argument("element is not homogeneous");
    bd = here;
  }
  if (!bd) throw std::invalid_argument("zero element has no bidegree");
  return *bd;
}

std::string CdgaModel::format(const Vector& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    os << (first ? "" : " + ") << x[i] << "*" << basis_[i].name;
    first = false;
  }
  return first ? "0" : os.str();
}

CdgaModel exterior_model(std::string name, const std::vector<std::string>& generators, const std::vector<int>& weights,
                         const std::vector<std::map<std::vector<std::string>, Scalar>>& d_generators,
                         const std::map<std::string, Scalar>& connection, Field f, bool decides_cohomology) {
  const int g = static_cast<int>(generators.size());
  if (g < 1 || g > 12) throw std::invalid_argument("exterior model needs 1..12 generators");
  if (weights.size() != generators.size() || d_generators.size() != generators.size())
    throw std::invalid_argument("exterior model: generator data has mismatched lengths");

  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << g); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    // lexicographic on ascending index lists
    for (unsigned x = a, y = b; x || y; x &= x - 1, y &= y - 1) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
    }
    return false;
  });
  const std::size_t n = masks.size();
  std::vector<int> where(n);
  for (std::size_t i = 0; i < n; ++i) where[masks[i]] = static_cast<int>(i);

  std::vector<BasisElement> basis;
  for (unsigned m : masks) {
    BasisElement b{"", std::popcount(m), 0};
    for (int i = 0; i < g; ++i)
      if (m >> i & 1u) {
        b.name += (b.name.empty() ? "" : "^") + generators[static_cast<std::size_t>(i)];
        b.weight += weights[static_cast<std::size_t>(i)];
      }
    if (b.name.empty()) b.name = "1";
    basis.push_back(std::move(b));
  }

  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, zero_vector(n, f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned s = masks[i], t = masks[j];
      if (s & t) continue;
      int inversions = 0;
      for (int a = 0; a < g; ++a)
        if (s >> a & 1u) inversions += std::popcount(t & ((1u << a) - 1));
      prod[i][j][static_cast<std::size_t>(where[s | t])] = Scalar(f, inversions % 2 ? -1 : 1);
    }

  auto gen_index = [&](const std::string& nm) {
    auto it = std::find(generators.begin(), generators.end(), nm);
    if (it == generators.end()) throw std::invalid_argument("exterior model: unknown generator '" + nm + "'");
    return static_cast<std::size_t>(it - generators.begin());
  };
  auto monomial = [&](const std::vector<std::string>& names) {
    Vector v = unit_vector(n, 0, f);
    for (const auto& nm : names) {
      Vector w = zero_vector(n, f);
      for (std::size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) w = axpy(std::move(w), v[i], prod[i][static_cast<std::size_t>(where[1u << gen_index(nm)])]);
      v = std::move(w);
    }
    return v;
  };
  auto mul = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!x[i].is_zero() && !y[j].is_zero()) out = axpy(std::move(out), x[i] * y[j], prod[i][j]);
    return out;
  };

  std::vector<Vector> diff(n, zero_vector(n, f));
  for (std::size_t i = 0; i < n; ++i) {
    unsigned m = masks[i];
    if (std::popcount(m) == 1) {
      for (const auto& [mono, c] : d_generators[static_cast<std::size_t>(std::countr_zero(m))])
        diff[i] = axpy(std::move(diff[i]), c, monomial(mono));
    } else if (std::popcount(m) > 1) {
      unsigned low = m & (~m + 1), rest = m ^ low;
      const auto lo = static_cast<std::size_t>(where[low]), re = static_cast<std::size_t>(where[rest]);
      diff[i] = mul(diff[lo], unit_vector(n, re, f));
      diff[i] = axpy(std::move(diff[i]), Scalar(f, -1), mul(unit_vector(n, lo, f), diff[re]));
    }
  }

  Vector conn = zero_vector(n, f);
  for (const auto& [nm, c] : connection) conn[static_cast<std::size_t>(where[1u << gen_index(nm)])] = c;
  return CdgaModel(std::move(name), std::move(basis), std::move(prod), std::move(diff), std::move(conn), f,
                   decides_cohomology);
}

CdgaModel heisenberg_model(Field f) {
  return exterior_model("heisenberg", {"a", "b", "c"}, {0, 0, 0}, {{}, {}, {{{"a", "b"}, Scalar::one(f)}}}, {}, f);
}

CdgaModel surface_model(int genus, Field f) {
  if (genus < 1) throw std::invalid_argument("surface genus must be at least 1");
  std::vector<BasisElement> basis{{"1", 0, 0}};
  for (int i = 1; i <= genus; ++i) {
    basis.push_back({"alpha" + std::to_string(i), 1, 0});
    basis.push_back({"beta" + std::to_string(i), 1, 0});
  }
  basis.push_back({"omega", 2, 0});
  const std::size_t n = basis.size(), omega = n - 1;
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, zero_vector(n, f)));
  for (std::size_t i = 0; i < n; ++i) {
    prod[0][i] = unit_vector(n, i, f);
    prod[i][0] = unit_vector(n, i, f);
  }
  for (int i = 0; i < genus; ++i) {
    auto a = static_cast<std::size_t>(1 + 2 * i), b = a + 1;
    prod[a][b][omega] = Scalar::one(f);
    prod[b][a][omega] = -Scalar::one(f);
  }
  return CdgaModel("surface", std::move(basis), std::move(prod), std::vector<Vector>(n, zero_vector(n, f)),
                   zero_vector(n, f), f);
}

CdgaModel mapping_torus_model(const Scalar& lambda) {
  const Field f = lambda.field();
  if (lambda.is_zero()) throw std::invalid_argument("mapping torus needs a nonzero lambda");
  return exterior_model("mapping_torus", {"alpha", "eta1", "eta2"}, {0, -1, -2},
                        {{}, {{{"alpha", "eta1"}, -lambda}}, {{{"alpha", "eta2"}, Scalar(f, -2) * lambda}}},
                        {{"alpha", -lambda}}, f, false);
}

CdgaModel trivial_rank2_base(Field f) {
  return exterior_model("trivial_rank2", {"alpha", "beta", "gamma"}, {0, 0, 0}, {{}, {}, {}}, {}, f);
}

CdgaModel build_model(std::string_view name, const std::map<std::string, std::string>& params, Field f) {
  auto param = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "heisenberg") return heisenberg_model(f);
  if (name == "trivial_rank2") return trivial_rank2_base(f);
  if (name == "surface") {
    Scalar g = Scalar::parse(Field::rational, param("genus", "1"));
    if (g.q().get_den() != 1) throw std::invalid_argument("surface genus must be an integer");
    return surface_model(static_cast<int>(g.q().get_num().get_si()), f);
  }
  if (name == "mapping_torus") return mapping_torus_model(Scalar::parse(f, param("lambda", "1")));
  throw std::invalid_argument("unknown builtin model '" + std::string(name) +
                              "' (expected heisenberg|surface|mapping_torus|trivial_rank2)");
}

bool ValuedForm::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const PolyVector& p) { return p.is_zero(); });
}

ValuedForm zero_valued(const CdgaModel& m, int l, int poly_degree) {
  return ValuedForm{l, poly_degree,
                    std::vector<PolyVector>(m.dim(), PolyVector::zero(l, poly_degree, poly_degree, m.field()))};
}

bool McReport::holds() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Vector& v) { return is_zero(v); }) &&
         std::all_of(valued_residuals.begin(), valued_residuals.end(), [](const ValuedForm& v) { return v.is_zero(); });
}

Vector rank1_bracket(const CdgaModel& m, const Vector& x, int i, const Vector& y, int j) {
  Vector p = m.mul(x, y);
  Scalar c(m.field(), j - i);
  for (auto& s : p) s *= c;
  return p;
}

ValuedForm valued_bracket(const CdgaModel& m, const ValuedForm& x, const ValuedForm& y) {
  if (x.l != y.l) throw std::invalid_argument("valued forms have different codimension");
  const int deg = x.poly_degree + y.poly_degree - 1;
  ValuedForm out = zero_valued(m, x.l, deg);
  for (std::size_t b = 0; b < m.dim(); ++b) {
    if (x.parts[b].is_zero()) continue;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (y.parts[c].is_zero()) continue;
      const Vector& wedge = m.product(static_cast<int>(b), static_cast<int>(c));
      if (is_zero(wedge)) continue;
      PolyVector br = bracket(x.parts[b], y.parts[c], deg);
      for (std::size_t e = 0; e < m.dim(); ++e)
        if (!wedge[e].is_zero()) out.parts[e] += wedge[e] * br;
    }
  }
  for (auto& p : out.parts) p = p.with_degrees(deg, deg);
  return out;
}

namespace {

ValuedForm valued_d(const CdgaModel& m, const ValuedForm& x) {
  ValuedForm out = zero_valued(m, x.l, x.poly_degree);
  for (std::size_t b = 0; b < m.dim(); ++b) {
    if (x.parts[b].is_zero()) continue;
    const Vector& db = m.differential(static_cast<int>(b));
    for (std::size_t e = 0; e < m.dim(); ++e)
      if (!db[e].is_zero()) out.parts[e] += db[e] * x.parts[b];
  }
  return out;
}

ValuedForm scale(ValuedForm x, const Scalar& s) {
  for (auto& p : x.parts) p *= s;
  return x;
}

void add_into(ValuedForm& acc, const ValuedForm& x) {
  for (std::size_t e = 0; e < acc.parts.size(); ++e) acc.parts[e] += x.parts[e];
  for (auto& p : acc.parts) p = p.with_degrees(acc.poly_degree, acc.poly_degree);
}

void check_data(const CdgaModel& m, const McData& data) {
  if (data.k < 2) throw std::invalid_argument("Maurer-Cartan data needs order k >= 2");
  const auto expected = static_cast<std::size_t>(data.k - 1);
  if (data.mode == CoefficientMode::rank1) {
    if (data.eta.size() != expected) throw std::invalid_argument("expected k-1 forms eta_1..eta_{k-1}");
    for (std::size_t i = 0; i < data.eta.size(); ++i) {
      const auto& e = data.eta[i];
      if (e.size() != m.dim()) throw std::invalid_argument("eta_" + std::to_string(i + 1) + " has wrong length");
      if (is_zero(e)) continue;
      auto [deg, wt] = m.bidegree(e);
      const int want = m.untwisted() ? 0 : -static_cast<int>(i + 1);
      if (deg != 1) throw std::invalid_argument("eta_" + std::to_string(i + 1) + " is not a 1-form");
      if (wt != want)
        throw std::invalid_argument("eta_" + std::to_string(i + 1) + " has weight " + std::to_string(wt) + ", expected " +
                                    std::to_string(want));
    }
  } else {
    if (!is_zero(m.connection())) throw std::invalid_argument("trivial coefficient mode needs a trivial connection");
    if (data.valued.size() != expected) throw std::invalid_argument("expected k-1 valued forms eta_1..eta_{k-1}");
    for (std::size_t i = 0; i < data.valued.size(); ++i) {
      const auto& v = data.valued[i];
      if (v.l != data.l || v.poly_degree != static_cast<int>(i + 2) || v.parts.size() != m.dim())
        throw std::invalid_argument("eta_" + std::to_string(i + 1) + " must take values in weight-" +
                                    std::to_string(i + 2) + " vector fields");
      for (std::size_t b = 0; b < m.dim(); ++b)
        if (!v.parts[b].is_zero() && m.basis()[b].degree != 1)
          throw std::invalid_argument("eta_" + std::to_string(i + 1) + " is not a 1-form");
    }
  }
}

}  // namespace

McReport mc_check(const CdgaModel& m, const McData& data) {
  check_data(m, data);
  McReport rep;
  rep.mode = data.mode;
  const Scalar half = Scalar::one(m.field()) / Scalar(m.field(), 2);
  for (int r = 1; r < data.k; ++r) {
    if (data.mode == CoefficientMode::rank1) {
      Vector res = m.d_twisted(data.eta[static_cast<std::size_t>(r - 1)], m.untwisted() ? 0 : -r);
      for (int i = 1; i < r; ++i) {
        Vector br = rank1_bracket(m, data.eta[static_cast<std::size_t>(i - 1)], i,
                                  data.eta[static_cast<std::size_t>(r - i - 1)], r - i);
        res = res + half * br;
      }
      rep.residuals.push_back(std::move(res));
    } else {
      ValuedForm res = valued_d(m, data.valued[static_cast<std::size_t>(r - 1)]);
      for (int i = 1; i < r; ++i)
        add_into(res, scale(valued_bracket(m, data.valued[static_cast<std::size_t>(i - 1)],
                                           data.valued[static_cast<std::size_t>(r - i - 1)]),
                            half));
      rep.valued_residuals.push_back(std::move(res));
    }
  }
  return rep;
}

ExtClass ext_class_rep(const CdgaModel& m, const McData& data) {
  auto mc = mc_check(m, data);
  for (int r = 1; r < data.k; ++r) {
    bool ok = data.mode == CoefficientMode::rank1 ? is_zero(mc.residuals[static_cast<std::size_t>(r - 1)])
                                                  : mc.valued_residuals[static_cast<std::size_t>(r - 1)].is_zero();
    if (!ok) throw std::domain_error("Maurer-Cartan equation fails at order " + std::to_string(r));
  }
  ExtClass e;
  e.mode = data.mode;
  const Scalar half = Scalar::one(m.field()) / Scalar(m.field(), 2);
  const int k = data.k;
  if (data.mode == CoefficientMode::rank1) {
    e.weight = m.untwisted() ? 0 : -k;
    e.form = m.zero();
    for (int i = 1; i < k; ++i)
      e.form = e.form + half * rank1_bracket(m, data.eta[static_cast<std::size_t>(i - 1)], i,
                                             data.eta[static_cast<std::size_t>(k - i - 1)], k - i);
    if (!is_zero(m.d_twisted(e.form, e.weight))) throw std::logic_error("extension class is not closed");
  } else {
    e.valued = zero_valued(m, data.l, k + 1);
    for (int i = 1; i < k; ++i)
      add_into(e.valued, scale(valued_bracket(m, data.valued[static_cast<std::size_t>(i - 1)],
                                              data.valued[static_cast<std::size_t>(k - i - 1)]),
                               half));
    if (!valued_d(m, e.valued).is_zero()) throw std::logic_error("extension class is not closed");
  }
  return e;
}

std::string to_string(ExactnessVerdict::Kind k) {
  switch (k) {
    case ExactnessVerdict::Kind::exact: return "exact";
    case ExactnessVerdict::Kind::not_exact: return "not exact";
    case ExactnessVerdict::Kind::undecided: return "undecided";
  }
  return "undecided";
}

ExactnessVerdict is_exact(const CdgaModel& m, const Vector& e, int degree, int weight) {
  if (e.size() != m.dim()) throw std::invalid_argument("element has wrong length for model " + m.name());
  const auto dst = m.block(degree, weight);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_zero() && std::find(dst.begin(), dst.end(), static_cast<int>(i)) == dst.end())
      throw std::invalid_argument("element does not lie in the requested (degree, weight) block");
  if (!is_zero(m.d_twisted(e, weight))) throw std::invalid_argument("element is not closed");
  ExactnessVerdict v;
  if (!m.decides_cohomology()) return v;

  const auto src = m.block(degree - 1, weight);
  Matrix mat(dst.size(), src.size(), m.field());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector img = m.d_twisted(unit_vector(m.dim(), static_cast<std::size_t>(src[c]), m.field()), weight);
    for (std::size_t r = 0; r < dst.size(); ++r) mat(r, c) = img[static_cast<std::size_t>(dst[r])];
  }
  Vector rhs;
  for (int i : dst) rhs.push_back(e[static_cast<std::size_t>(i)]);
  auto res = solve_or_certify(mat, rhs);
  if (auto* sol = std::get_if<AffineSolution>(&res)) {
    v.kind = ExactnessVerdict::Kind::exact;
    Vector prim = m.zero();
    for (std::size_t c = 0; c < src.size(); ++c) prim[static_cast<std::size_t>(src[c])] = sol->particular[c];
    v.primitive = std::move(prim);
  } else {
    v.kind = ExactnessVerdict::Kind::not_exact;
    v.certificate = std::get<InfeasibilityCertificate>(std::move(res));
  }
  return v;
}

ExactnessVerdict is_exact(const CdgaModel& m, const ValuedForm& e, int degree) {
  ExactnessVerdict all;
  all.kind = ExactnessVerdict::Kind::exact;
  ValuedForm prim = zero_valued(m, e.l, e.poly_degree);
  for (const auto& t : module_basis(e.l, e.poly_degree)) {
    Vector form = m.zero();
    for (std::size_t b = 0; b < m.dim(); ++b) form[b] = e.parts[b].coeff(t.component, t.index);
    auto v = is_exact(m, form, degree, 0);
    if (v.kind != ExactnessVerdict::Kind::exact) return v;
    for (std::size_t b = 0; b < m.dim(); ++b)
      if (!(*v.primitive)[b].is_zero())
        prim.parts[b] += PolyVector::monomial(e.l, t.component, t.index, (*v.primitive)[b]);
  }
  all.valued_primitive = std::move(prim);
  return all;
}

Representation surface_rep_bridge(int genus, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                  const std::vector<Scalar>& w, const std::vector<Scalar>& z) {
  const auto g = static_cast<std::size_t>(genus);
  if (genus < 1) throw std::invalid_argument("surface genus must be at least 1");
  if (x.size() != g || y.size() != g || w.size() != g || z.size() != g)
    throw std::invalid_argument("need one period of each kind per handle");
  const Field f = x.front().field();
  std::vector<JetDiffeo> images;
  for (std::size_t i = 0; i < g; ++i) {
    images.push_back(from_chart_g31({x[i], w[i], Scalar::one(f)}, f));
    images.push_back(from_chart_g31({y[i], z[i], Scalar::one(f)}, f));
  }
  return Representation(surface_presentation(genus), std::move(images));
}

McData surface_mc_data(const CdgaModel& surface, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                       const std::vector<Scalar>& w, const std::vector<Scalar>& z) {
  McData d;
  d.k = 3;
  Vector e1 = surface.zero(), e2 = surface.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto a = static_cast<std::size_t>(surface.index_of("alpha" + std::to_string(i + 1)));
    auto b = static_cast<std::size_t>(surface.index_of("beta" + std::to_string(i + 1)));
    e1[a] = x[i];
    e1[b] = y[i];
    e2[a] = w[i];
    e2[b] = z[i];
  }
  d.eta = {e1, e2};
  return d;
}

}  // namespace jetfol
