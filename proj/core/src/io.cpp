#include "jetfol/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace jetfol::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field_of(const Json& j, const std::string& where, const std::string& key) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(where, key), "missing required field");
  return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

int int_of(const Json& j, const std::string& where, int min) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < min || v > 1000000) throw ParseError(where, "integer " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

Field field_from(const Json& j, Field fallback, const std::string& where) {
  if (!j.is_object() || !j.contains("field")) return fallback;
  try {
    return parse_field(string_of(j.at("field"), at(where, "field")));
  } catch (const std::invalid_argument& e) {
    throw ParseError(at(where, "field"), e.what());
  }
}

Json components_to_json(int l, const Coeffs& coeffs) {
  Json comps = Json::array();
  for (int i = 0; i < l; ++i) comps.push_back(Json::array());
  for (const auto& [t, c] : coeffs) {
    Json exps = Json::array();
    for (int e : t.index.exps()) exps.push_back(e);
    comps[static_cast<std::size_t>(t.component)].push_back(Json{{"exps", exps}, {"coeff", c.str()}});
  }
  return comps;
}

Coeffs components_from_json(const Json& j, int l, Field f, const std::string& where) {
  const auto& comps = array_of(j, where);
  if (comps.size() != static_cast<std::size_t>(l))
    throw ParseError(where, "expected " + std::to_string(l) + " components, got " + std::to_string(comps.size()));
  Coeffs out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto ci = at(where, i);
    const auto& terms = array_of(comps[i], ci);
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const auto tn = at(ci, n);
      const auto& exps = array_of(field_of(terms[n], tn, "exps"), at(tn, "exps"));
      if (exps.size() != static_cast<std::size_t>(l))
        throw ParseError(at(tn, "exps"), "expected " + std::to_string(l) + " exponents");
      std::vector<int> e;
      for (std::size_t m = 0; m < exps.size(); ++m) e.push_back(int_of(exps[m], at(at(tn, "exps"), m), 0));
      Scalar c = scalar_from_json(field_of(terms[n], tn, "coeff"), f, at(tn, "coeff"));
      Term t{static_cast<int>(i), MultiIndex(std::move(e))};
      if (out.count(t)) throw ParseError(tn, "duplicate monomial");
      if (!c.is_zero()) out.emplace(std::move(t), std::move(c));
    }
  }
  return out;
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const FieldMismatch& e) {
    throw ParseError(where, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(where, e.what());
  }
}

Json certificate_to_json(const InfeasibilityCertificate& c) {
  return Json{{"row_combination", to_json(c.row_combination)}, {"residual", c.residual.str()}};
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string(), std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, Field f, const std::string& where) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_number_float()) {
    if (f == Field::real) return Scalar::real(j.get<double>());
    throw ParseError(where, "rational mode needs exact values; write the number as a string such as \"1/3\"");
  }
  if (!j.is_string()) throw ParseError(where, "expected a scalar string");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

Vector vector_from_json(const Json& j, Field f, const std::string& where) {
  Vector v;
  const auto& a = array_of(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(scalar_from_json(a[i], f, at(where, i)));
  return v;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Matrix matrix_from_json(const Json& j, Field f, const std::string& where) {
  const auto& a = array_of(j, where);
  if (a.empty()) throw ParseError(where, "matrix needs at least one row");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.size(); ++r) {
    rows.push_back(vector_from_json(a[r], f, at(where, r)));
    if (rows.back().size() != rows.front().size()) throw ParseError(at(where, r), "ragged matrix row");
  }
  return Matrix::from_rows(rows, f, rows.front().size());
}

Json to_json(const JetMap& m) {
  return Json{{"l", m.l()}, {"k", m.k()}, {"field", std::string(to_string(m.field()))},
              {"components", components_to_json(m.l(), m.coeffs())}};
}

JetMap jetmap_from_json(const Json& j, const std::string& where) {
  const int l = int_of(field_of(j, where, "l"), at(where, "l"), 1);
  const int k = int_of(field_of(j, where, "k"), at(where, "k"), 1);
  const Field f = field_from(j, Field::rational, where);
  auto coeffs = components_from_json(field_of(j, where, "components"), l, f, at(where, "components"));
  return wrap(at(where, "components"), [&] { return JetMap(l, k, f, std::move(coeffs)); });
}

JetDiffeo jetdiffeo_from_json(const Json& j, const std::string& where) {
  auto m = jetmap_from_json(j, where);
  return wrap(where, [&] { return JetDiffeo(std::move(m)); });
}

Json to_json(const PolyVector& v) {
  return Json{{"l", v.l()}, {"degrees", Json::array({v.min_degree(), v.max_degree()})},
              {"field", std::string(to_string(v.field()))}, {"components", components_to_json(v.l(), v.coeffs())}};
}

PolyVector polyvector_from_json(const Json& j, const std::string& where) {
  const int l = int_of(field_of(j, where, "l"), at(where, "l"), 1);
  const auto dw = at(where, "degrees");
  const auto& deg = array_of(field_of(j, where, "degrees"), dw);
  if (deg.size() != 2) throw ParseError(dw, "expected [min, max]");
  const int lo = int_of(deg[0], at(dw, 0), 1), hi = int_of(deg[1], at(dw, 1), 1);
  const Field f = field_from(j, Field::rational, where);
  auto coeffs = components_from_json(field_of(j, where, "components"), l, f, at(where, "components"));
  return wrap(where, [&] { return PolyVector(l, lo, hi, f, std::move(coeffs)); });
}

Json to_json(const LevyCoords& c) { return Json{{"linear", to_json(c.linear)}, {"nilpotent", to_json(c.nilpotent)}}; }

LevyCoords levy_from_json(const Json& j, const std::string& where) {
  auto nil = polyvector_from_json(field_of(j, where, "nilpotent"), at(where, "nilpotent"));
  auto lin = matrix_from_json(field_of(j, where, "linear"), nil.field(), at(where, "linear"));
  if (lin.rows() != static_cast<std::size_t>(nil.l()) || lin.cols() != lin.rows())
    throw ParseError(at(where, "linear"), "linear part must be l x l");
  return LevyCoords{std::move(lin), std::move(nil)};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(p.format_word(r));
  return Json{{"generators", p.generators()}, {"relators", rels}};
}

Presentation presentation_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> gens;
  const auto gw = at(where, "generators");
  const auto& ga = array_of(field_of(j, where, "generators"), gw);
  for (std::size_t i = 0; i < ga.size(); ++i) gens.push_back(string_of(ga[i], at(gw, i)));
  Presentation bare = wrap(gw, [&] { return Presentation(gens, {}); });
  std::vector<Word> rels;
  const auto rw = at(where, "relators");
  const auto& ra = j.contains("relators") ? array_of(j.at("relators"), rw) : Json::array();
  for (std::size_t r = 0; r < ra.size(); ++r) {
    std::vector<std::string> letters;
    const auto& la = array_of(ra[r], at(rw, r));
    for (std::size_t i = 0; i < la.size(); ++i) letters.push_back(string_of(la[i], at(at(rw, r), i)));
    rels.push_back(wrap(at(rw, r), [&] { return bare.parse_word(letters); }));
  }
  return Presentation(std::move(gens), std::move(rels));
}

Presentation resolve_presentation(const std::string& spec, const std::filesystem::path& base_dir) {
  if (spec == "circle" || spec == "torus" || spec == "heisenberg" || spec.starts_with("surface:"))
    return wrap("presentation", [&] { return builtin_presentation(spec); });
  std::filesystem::path p(spec);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return presentation_from_json(read_json_file(p), p.string());
}

Json to_json(const Representation& r) {
  Json images = Json::object();
  for (int g = 0; g < r.presentation().rank(); ++g) images[r.presentation().generators()[static_cast<std::size_t>(g)]] = to_json(r.image(g));
  return Json{{"presentation", to_json(r.presentation())}, {"k", r.k()}, {"l", r.l()},
              {"field", std::string(to_string(r.field()))}, {"images", images}};
}

RepresentationInput representation_input_from_json(const Json& j, Field f, const std::filesystem::path& base_dir,
                                                   const std::string& where) {
  const auto pw = at(where, "presentation");
  const auto& pj = field_of(j, where, "presentation");
  Presentation p = pj.is_string() ? resolve_presentation(pj.get<std::string>(), base_dir) : presentation_from_json(pj, pw);
  const int k = int_of(field_of(j, where, "k"), at(where, "k"), 1);
  const int l = int_of(field_of(j, where, "l"), at(where, "l"), 1);
  f = field_from(j, f, where);

  const auto iw = at(where, "images");
  const auto& ij = field_of(j, where, "images");
  if (!ij.is_object()) throw ParseError(iw, "expected an object keyed by generator name");
  for (const auto& [name, _] : ij.items())
    if (std::find(p.generators().begin(), p.generators().end(), name) == p.generators().end())
      throw ParseError(at(iw, name), "not a generator of the presentation");
  std::vector<JetDiffeo> images;
  for (const auto& name : p.generators()) {
    const auto w = at(iw, name);
    auto it = ij.find(name);
    if (it == ij.end()) throw ParseError(w, "missing image for generator");
    if (it->is_array()) {
      if (l != 1 || k > 3) throw ParseError(w, "chart shorthand is only accepted for l = 1, k <= 3");
      Vector c = vector_from_json(*it, f, w);
      if (c.size() != static_cast<std::size_t>(k))
        throw ParseError(w, "chart needs " + std::to_string(k) + " entries [c1, ..., c0]");
      images.push_back(wrap(w, [&] { return from_chart_l1(c); }));
    } else {
      auto g = jetdiffeo_from_json(*it, w);
      if (g.l() != l || g.k() != k) throw ParseError(w, "image does not match the declared (l, k)");
      if (g.field() != f) throw ParseError(at(w, "field"), "image field differs from the representation field");
      images.push_back(std::move(g));
    }
  }
  return RepresentationInput{std::move(p), std::move(images)};
}

Representation representation_from_json(const Json& j, Field f, const std::filesystem::path& base_dir,
                                         const std::string& where) {
  auto in = representation_input_from_json(j, f, base_dir, where);
  return wrap(at(where, "images"), [&] { return Representation(std::move(in.presentation), std::move(in.images)); });
}

Json element_to_json(const CdgaModel& m, const Vector& x) {
  Json o = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) o[m.basis()[i].name] = x[i].str();
  return o;
}

Vector element_from_json(const CdgaModel& m, const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object {basis name: coefficient}");
  Vector v = m.zero();
  for (const auto& [name, c] : j.items()) {
    int i = wrap(at(where, name), [&] { return m.index_of(name); });
    v[static_cast<std::size_t>(i)] = scalar_from_json(c, m.field(), at(where, name));
  }
  return v;
}

Json to_json(const CdgaModel& m) {
  Json basis = Json::array(), d = Json::object(), product = Json::array();
  for (const auto& b : m.basis()) basis.push_back(Json{{"name", b.name}, {"degree", b.degree}, {"weight", b.weight}});
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto di = element_to_json(m, m.differential(static_cast<int>(i)));
    if (!di.empty()) d[m.basis()[i].name] = di;
    for (std::size_t k = 0; k < m.dim(); ++k) {
      auto p = element_to_json(m, m.product(static_cast<int>(i), static_cast<int>(k)));
      if (!p.empty()) product.push_back(Json{{"x", m.basis()[i].name}, {"y", m.basis()[k].name}, {"value", p}});
    }
  }
  return Json{{"name", m.name()},           {"field", std::string(to_string(m.field()))},
              {"basis", basis},             {"d", d},
              {"product", product},         {"connection", element_to_json(m, m.connection())},
              {"decides_cohomology", m.decides_cohomology()}};
}

CdgaModel model_from_json(const Json& j, Field f, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  f = field_from(j, f, where);
  if (j.contains("builtin")) {
    const auto name = string_of(j.at("builtin"), at(where, "builtin"));
    std::map<std::string, std::string> params;
    if (j.contains("params")) {
      const auto& pj = j.at("params");
      if (!pj.is_object()) throw ParseError(at(where, "params"), "expected an object");
      for (const auto& [key, val] : pj.items())
        params[key] = val.is_string() ? val.get<std::string>() : val.dump();
    }
    return wrap(where, [&] { return build_model(name, params, f); });
  }

  const auto bw = at(where, "basis");
  const auto& ba = array_of(field_of(j, where, "basis"), bw);
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < ba.size(); ++i) {
    const auto w = at(bw, i);
    basis.push_back({string_of(field_of(ba[i], w, "name"), at(w, "name")),
                     int_of(field_of(ba[i], w, "degree"), at(w, "degree"), 0),
                     ba[i].contains("weight") ? int_of(ba[i].at("weight"), at(w, "weight"), -1000000) : 0});
  }
  const std::size_t n = basis.size();
  if (n == 0) throw ParseError(bw, "basis is empty");
  auto index = [&](const std::string& name, const std::string& w) {
    for (std::size_t i = 0; i < n; ++i)
      if (basis[i].name == name) return i;
    throw ParseError(w, "unknown basis element '" + name + "'");
  };
  auto elem = [&](const Json& e, const std::string& w) {
    if (!e.is_object()) throw ParseError(w, "expected an object {basis name: coefficient}");
    Vector v = zero_vector(n, f);
    for (const auto& [name, c] : e.items()) v[index(name, at(w, name))] = scalar_from_json(c, f, at(w, name));
    return v;
  };

  std::vector<std::vector<Vector>> products(n, std::vector<Vector>(n, zero_vector(n, f)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  // A degree-0, weight-0 element named "1" is the unit.
  for (std::size_t u = 0; u < n; ++u)
    if (basis[u].name == "1" && basis[u].degree == 0 && basis[u].weight == 0)
      for (std::size_t i = 0; i < n; ++i) {
        products[u][i] = products[i][u] = unit_vector(n, i, f);
        given[u][i] = given[i][u] = true;
      }
  if (j.contains("product")) {
    const auto pw = at(where, "product");
    const auto& pa = array_of(j.at("product"), pw);
    for (std::size_t e = 0; e < pa.size(); ++e) {
      const auto w = at(pw, e);
      auto x = index(string_of(field_of(pa[e], w, "x"), at(w, "x")), at(w, "x"));
      auto y = index(string_of(field_of(pa[e], w, "y"), at(w, "y")), at(w, "y"));
      products[x][y] = elem(field_of(pa[e], w, "value"), at(w, "value"));
      given[x][y] = true;
    }
    // Fill missing mirrored entries by graded commutativity.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (given[x][y] && !given[y][x]) {
          Scalar sgn(f, (basis[x].degree * basis[y].degree) % 2 ? -1 : 1);
          products[y][x] = sgn * products[x][y];
        }
  }
  std::vector<Vector> diff(n, zero_vector(n, f));
  if (j.contains("d")) {
    const auto dw = at(where, "d");
    if (!j.at("d").is_object()) throw ParseError(dw, "expected an object {basis name: element}");
    for (const auto& [name, e] : j.at("d").items()) diff[index(name, at(dw, name))] = elem(e, at(dw, name));
  }
  Vector conn = j.contains("connection") ? elem(j.at("connection"), at(where, "connection")) : zero_vector(n, f);
  const std::string name = j.contains("name") ? string_of(j.at("name"), at(where, "name")) : "custom";
  const bool decides = j.contains("decides_cohomology") ? j.at("decides_cohomology").get<bool>() : true;
  return wrap(where, [&] { return CdgaModel(name, basis, products, diff, conn, f, decides); });
}

Json valued_to_json(const CdgaModel& m, const ValuedForm& v) {
  Json o = Json::object();
  for (std::size_t b = 0; b < m.dim(); ++b)
    if (!v.parts[b].is_zero()) o[m.basis()[b].name] = to_json(v.parts[b]);
  return o;
}

ValuedForm valued_from_json(const CdgaModel& m, const Json& j, int l, int poly_degree, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object {basis name: PolyVector}");
  ValuedForm v = zero_valued(m, l, poly_degree);
  for (const auto& [name, pj] : j.items()) {
    const auto w = at(where, name);
    int b = wrap(w, [&] { return m.index_of(name); });
    auto pv = polyvector_from_json(pj, w);
    if (pv.l() != l) throw ParseError(at(w, "l"), "codimension differs from the declared l");
    if (pv.field() != m.field()) throw ParseError(at(w, "field"), "field differs from the model field");
    auto layer = pv.homogeneous_part(poly_degree);
    if (layer.coeffs().size() != pv.coeffs().size())
      throw ParseError(w, "expected values of polynomial degree " + std::to_string(poly_degree));
    v.parts[static_cast<std::size_t>(b)] = std::move(layer);
  }
  return v;
}

Json to_json(const McData& d, const CdgaModel& m) {
  Json eta = Json::array();
  if (d.mode == CoefficientMode::rank1)
    for (const auto& e : d.eta) eta.push_back(element_to_json(m, e));
  else
    for (const auto& e : d.valued) eta.push_back(valued_to_json(m, e));
  Json o{{"k", d.k}, {"mode", d.mode == CoefficientMode::rank1 ? "rank1" : "trivial"}, {"eta", eta}};
  if (d.mode == CoefficientMode::trivial) o["l"] = d.l;
  return o;
}

McData mcdata_from_json(const Json& j, const CdgaModel& m, const std::string& where) {
  McData d;
  d.k = int_of(field_of(j, where, "k"), at(where, "k"), 2);
  if (j.contains("mode")) {
    auto mode = string_of(j.at("mode"), at(where, "mode"));
    if (mode == "rank1")
      d.mode = CoefficientMode::rank1;
    else if (mode == "trivial")
      d.mode = CoefficientMode::trivial;
    else
      throw ParseError(at(where, "mode"), "expected rank1 or trivial");
  }
  const auto ew = at(where, "eta");
  const auto& ea = array_of(field_of(j, where, "eta"), ew);
  if (ea.size() != static_cast<std::size_t>(d.k - 1))
    throw ParseError(ew, "expected k - 1 = " + std::to_string(d.k - 1) + " forms");
  if (d.mode == CoefficientMode::rank1) {
    std::vector<int> deg1;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m.basis()[i].degree == 1) deg1.push_back(static_cast<int>(i));
    for (std::size_t r = 0; r < ea.size(); ++r) {
      const auto w = at(ew, r);
      if (ea[r].is_array()) {
        Vector c = vector_from_json(ea[r], m.field(), w);
        if (c.size() != deg1.size())
          throw ParseError(w, "expected " + std::to_string(deg1.size()) + " coefficients over the degree-1 basis");
        Vector v = m.zero();
        for (std::size_t i = 0; i < deg1.size(); ++i) v[static_cast<std::size_t>(deg1[i])] = c[i];
        d.eta.push_back(std::move(v));
      } else {
        d.eta.push_back(element_from_json(m, ea[r], w));
      }
    }
  } else {
    d.l = int_of(field_of(j, where, "l"), at(where, "l"), 1);
    for (std::size_t r = 0; r < ea.size(); ++r)
      d.valued.push_back(valued_from_json(m, ea[r], d.l, static_cast<int>(r) + 2, at(ew, r)));
  }
  return d;
}

std::vector<Scalar> rho0_from_json(const Json& j, const Presentation& p, Field f, const std::string& where) {
  const auto vw = at(where, "values");
  const auto& vals = field_of(j, where, "values");
  if (!vals.is_object()) throw ParseError(vw, "expected an object keyed by generator name");
  for (const auto& [name, _] : vals.items())
    if (std::find(p.generators().begin(), p.generators().end(), name) == p.generators().end())
      throw ParseError(at(vw, name), "not a generator of the presentation");
  std::vector<Scalar> out;
  for (const auto& name : p.generators()) {
    auto it = vals.find(name);
    if (it == vals.end()) throw ParseError(at(vw, name), "missing value for generator");
    out.push_back(scalar_from_json(*it, f, at(vw, name)));
  }
  return out;
}

Json to_json(const ValidationReport& r) {
  Json devs = Json::array();
  for (const auto& d : r.deviations) devs.push_back(d.str());
  return Json{{"valid", r.valid}, {"relator_deviations", devs}};
}

Json to_json(const H1Result& h) {
  Json z = Json::array(), b = Json::array();
  for (const auto& v : h.z1_basis) z.push_back(to_json(v));
  for (const auto& v : h.b1_basis) b.push_back(to_json(v));
  return Json{{"dim_z1", h.z1}, {"dim_b1", h.b1}, {"dim_h1", h.h1}, {"z1_basis", z}, {"b1_basis", b}};
}

Json to_json(const LiftReport& r, const Presentation& p) {
  Json defects = Json::array();
  for (std::size_t i = 0; i < r.defects.size(); ++i)
    defects.push_back(Json{{"relator", p.format_word(p.relators()[i])}, {"defect", r.defects[i].str()},
                           {"coordinates", to_json(r.defects[i].coordinates(r.defects[i].max_degree()))}});
  Json o{{"liftable", r.liftable}, {"status", r.liftable ? "liftable" : "not liftable"}, {"defects", defects}};
  if (r.certificate) o["certificate"] = certificate_to_json(*r.certificate);
  if (r.solution) {
    Json ker = Json::array();
    for (const auto& v : r.solution->kernel) ker.push_back(to_json(v));
    o["correction"] = Json{{"particular", to_json(r.solution->particular)}, {"kernel", ker}};
  }
  if (r.witness) o["witness"] = to_json(*r.witness);
  return o;
}

Json to_json(const ExtensionSpace& s) {
  Json z = Json::array(), b = Json::array();
  for (const auto& v : s.z1_basis) z.push_back(to_json(v));
  for (const auto& v : s.b1_basis) b.push_back(to_json(v));
  return Json{{"base_lift", to_json(s.base_lift)}, {"dim_affine", s.z1_basis.size()}, {"z1_basis", z},
              {"b1_basis", b}, {"dim_h1", s.h1_dim}};
}

Json to_json(const McReport& r, const CdgaModel& m) {
  Json res = Json::array();
  for (std::size_t i = 0; i < r.residuals.size(); ++i)
    res.push_back(Json{{"order", i + 2}, {"residual", m.format(r.residuals[i])}});
  for (std::size_t i = 0; i < r.valued_residuals.size(); ++i)
    res.push_back(Json{{"order", i + 2}, {"residual", r.valued_residuals[i].is_zero() ? Json("0") : valued_to_json(m, r.valued_residuals[i])}});
  return Json{{"holds", r.holds()}, {"residuals", res}};
}

Json to_json(const ExtClass& e, const CdgaModel& m) {
  if (e.mode == CoefficientMode::rank1)
    return Json{{"mode", "rank1"}, {"weight", e.weight}, {"form", element_to_json(m, e.form)}, {"text", m.format(e.form)}};
  return Json{{"mode", "trivial"}, {"poly_degree", e.valued.poly_degree}, {"form", valued_to_json(m, e.valued)}};
}

Json to_json(const ExactnessVerdict& v, const CdgaModel& m) {
  Json o{{"verdict", to_string(v.kind)}};
  if (v.primitive) o["primitive"] = element_to_json(m, *v.primitive);
  if (v.valued_primitive) o["primitive"] = valued_to_json(m, *v.valued_primitive);
  if (v.certificate) o["certificate"] = certificate_to_json(*v.certificate);
  if (v.kind == ExactnessVerdict::Kind::undecided)
    o["note"] = "the model of " + m.name() + " is not known to compute this cohomology; representative reported only";
  return o;
}

Json to_json(const ClassifyReport& r) {
  Json o{{"b1_w1", r.betti.b1_w1}, {"b1_w2", r.betti.b1_w2}, {"stratum", r.stratum()}, {"zero_point", r.zero_point_note}};
  o["sphere_dim"] = r.sphere_dim ? Json(*r.sphere_dim) : Json("point");
  return o;
}

Json to_json(const OrbitRepresentative& o) {
  return Json{{"u", o.u}, {"v", o.v}, {"s", o.s}};
}

}  // namespace jetfol::io
