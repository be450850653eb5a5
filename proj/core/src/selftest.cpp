#include "jetfol/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "jetfol/cdga.hpp"
#include "jetfol/charvar.hpp"
#include "jetfol/io.hpp"
#include "jetfol/obstruction.hpp"
#include "jetfol/random.hpp"

namespace jetfol {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }

using Property = std::function<void(Sampler&)>;

void group_axioms(Sampler& s) {
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 4; ++k)
      for (int n = 0; n < 10; ++n) {
        auto f = s.jet(l, k), g = s.jet(l, k), h = s.jet(l, k);
        check(compose(compose(f, g), h) == compose(f, compose(g, h)), "associativity fails at l=" + std::to_string(l));
        auto fi = invert(f);
        check(compose(f, fi).is_identity() && compose(fi, f).is_identity(), "inverse is not two-sided: " + f.str());
        int k2 = s.integer(1, k);
        check(truncate(compose(f, g), k2) == compose(truncate(f, k2), truncate(g, k2)), "truncation is not a homomorphism");
      }
}

void chart_laws(Sampler& s) {
  for (int n = 0; n < 30; ++n) {
    auto a = s.g31(), b = s.g31();
    auto ga = from_chart_g31(a, s.field()), gb = from_chart_g31(b, s.field());
    check(chart_g31(ga) == a, "G31 chart round trip");
    check(chart_g31(compose(ga, gb)) == g31_product(a, b), "G31 product law");
    for (int l = 1; l <= 2; ++l) {
      G2lCoords c{s.polyvector(l, 2, 2), s.invertible_matrix(l)}, d{s.polyvector(l, 2, 2), s.invertible_matrix(l)};
      check(chart_g2l(compose(from_chart_g2l(c), from_chart_g2l(d))) == g2l_product(c, d), "G2l product law");
    }
  }
}

void exp_log(Sampler& s) {
  for (int l = 1; l <= 2; ++l)
    for (int k = 2; k <= 5; ++k)
      for (int n = 0; n < 5; ++n) {
        auto x = s.polyvector(l, 2, k);
        check(log_jet(exp_jet(x, k)) == x, "log(exp X) != X");
        auto u = s.unipotent(l, k);
        check(exp_jet(log_jet(u), k) == u, "exp(log u) != u");
        auto g = s.jet(l, k);
        check(levy_compose(levy_decompose(g), k) == g, "Levy decomposition does not recompose");
        check(truncate(section_sk(g), k) == g, "section does not truncate back");
      }
  for (int k = 2; k <= 3; ++k) {
    auto x = s.polyvector(1, 2, k), y = s.polyvector(1, 2, k);
    check(compose(exp_jet(x, k), exp_jet(y, k)) == exp_jet(x + y, k), "exp is not additive on an abelian layer");
  }
}

void bracket_identities(Sampler& s) {
  for (int n = 0; n < 10; ++n) {
    auto x = s.polyvector(2, 1, 3), y = s.polyvector(2, 1, 3), z = s.polyvector(2, 1, 3);
    check(bracket(x, y) == -bracket(y, x), "bracket is not antisymmetric");
    auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    check(jac.is_zero(), "Jacobi identity fails");
  }
}

void cocycle(Sampler& s) {
  auto act = top_layer_action(3);
  Cochain2 alpha = [](const JetDiffeo& a, const JetDiffeo& b) { return alpha_cocycle(a, b).coordinates(4); };
  for (int n = 0; n < 20; ++n) {
    auto c1 = from_chart_g31(s.g31(), s.field()), c2 = from_chart_g31(s.g31(), s.field()),
         c3 = from_chart_g31(s.g31(), s.field());
    check(is_zero(cochain_delta_eval(alpha, c1, c2, c3, act)), "delta(alpha) != 0");
    auto a = s.g31(), b = s.g31();
    auto v = alpha_cocycle(from_chart_g31(a, s.field()), from_chart_g31(b, s.field()));
    check(v.coeff(0, MultiIndex({4})) == e41_closed_form(a, b), "alpha does not match the closed form");
  }
}

void dilation(Sampler& s) {
  for (int l = 1; l <= 2; ++l)
    for (int n = 0; n < 10; ++n) {
      const int k = s.integer(1, 4);
      auto g = s.jet(l, k), h = s.jet(l, k);
      check(dilation_homotopy(Q(1), g) == g, "h_1 != id");
      check(dilation_homotopy(Q(0), g) == JetDiffeo::linear(g.linear_part(), k), "h_0 != j o pi");
      Scalar t = Q(s.integer(1, 9), s.integer(1, 5));
      check(dilation_homotopy(t, compose(g, h)) == compose(dilation_homotopy(t, g), dilation_homotopy(t, h)),
            "h_t is not a homomorphism");
      auto d = dilation_jet(t.inverse(), l, k);
      check(dilation_homotopy(t, g) == compose(compose(d, g), invert(d)), "h_t is not conjugation by the dilation");
    }
}

void crossed_vs_d1(Sampler& s) {
  for (const char* name : {"torus", "heisenberg", "surface:2"}) {
    auto p = builtin_presentation(name);
    std::vector<Matrix> ms;
    for (int g = 0; g < p.rank(); ++g) ms.push_back(s.invertible_matrix(2));
    ModuleAction act(2, s.field(), ms);
    std::vector<Vector> c;
    for (int g = 0; g < p.rank(); ++g) c.push_back(s.scalars(2));
    Vector stacked;
    for (const auto& r : p.relators()) {
      auto v = crossed_extend(c, r, act);
      stacked.insert(stacked.end(), v.begin(), v.end());
    }
    check(d1_matrix(p, act) * flatten(c) == stacked, std::string("d1 disagrees with crossed extension on ") + name);
  }
}

void h1_table(Sampler&) {
  auto h1 = [](const Presentation& p, const ModuleAction& a) { return twisted_h1(p, a).h1; };
  const Field f = Field::rational;
  check(h1(builtin_presentation("circle"), ModuleAction::trivial(1, 1, f)) == 1, "circle/trivial");
  check(h1(builtin_presentation("circle"), ModuleAction::scalar({Q(2)})) == 0, "circle/2");
  check(h1(builtin_presentation("torus"), ModuleAction::trivial(2, 1, f)) == 2, "torus/trivial");
  for (int g = 1; g <= 3; ++g)
    check(h1(surface_presentation(g), ModuleAction::trivial(2 * g, 1, f)) == static_cast<std::size_t>(2 * g),
          "surface/trivial genus " + std::to_string(g));
}

// Commuting unipotent pair in G_{3,1}.
Representation torus_rep(Sampler& s, bool liftable) {
  G31Coords a{s.scalar(), s.scalar(), Scalar::one(s.field())}, b{s.scalar(), s.scalar(), Scalar::one(s.field())};
  if (liftable) {
    Scalar t = s.scalar();
    b = G31Coords{t * a.a1, t * a.a2, Scalar::one(s.field())};
  }
  return Representation(builtin_presentation("torus"), {from_chart_g31(a, s.field()), from_chart_g31(b, s.field())});
}

void surface_quadric(Sampler& s) {
  std::optional<Scalar> ratio;
  for (int genus = 1; genus <= 2; ++genus)
    for (int n = 0; n < 15; ++n) {
      auto x = s.scalars(static_cast<std::size_t>(genus)), y = s.scalars(static_cast<std::size_t>(genus)),
           w = s.scalars(static_cast<std::size_t>(genus)), z = s.scalars(static_cast<std::size_t>(genus));
      if (n % 3 == 0) z[0] = x[0].is_zero() ? z[0] : (y[0] * w[0] - (genus == 2 ? x[1] * z[1] - y[1] * w[1] : Q(0))) / x[0];
      Scalar q = Q(0);
      for (int i = 0; i < genus; ++i) q += x[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
      auto rep = lift_obstruction(surface_rep_bridge(genus, x, y, w, z));
      check(rep.liftable == q.is_zero(), "liftability disagrees with the quadric");
      if (!q.is_zero()) {
        Scalar r = rep.defects[0].coordinates(4)[0] / q;
        check(!ratio || *ratio == r, "defect / quadric is not constant");
        ratio = r;
      }
      auto model = surface_model(genus);
      auto e = ext_class_rep(model, surface_mc_data(model, x, y, w, z));
      Vector expect = model.zero();
      expect[static_cast<std::size_t>(model.index_of("omega"))] = q;
      check(e.form == expect, "surface extension class is not the quadric times omega");
    }
}

void conjugation(Sampler& s) {
  for (int n = 0; n < 10; ++n) {
    auto r = torus_rep(s, n % 2 == 0);
    auto g = from_chart_g31(s.g31(), s.field());
    auto rc = conjugate_rep(g, r);
    auto a = lift_obstruction(r), b = lift_obstruction(rc);
    check(a.liftable == b.liftable, "liftability changed under conjugation");
  }
}

void extension_space(Sampler& s) {
  for (int n = 0; n < 5; ++n) {
    auto r = torus_rep(s, true);
    auto es = enumerate_lifts(r);
    check(es.z1_basis.size() == 2 && es.h1_dim == 2, "torus extension space is not 2-dimensional");
    for (int g = 0; g < 2; ++g) check(truncate(es.base_lift.image(g), 3) == r.image(g), "lift does not project to input");
  }
}

void heisenberg(Sampler&) {
  auto h = heisenberg_model();
  McData d;
  d.k = 4;
  d.eta = {h.element("a"), h.element("b"), Q(-1) * h.element("c")};
  check(mc_check(h, d).holds(), "Heisenberg MC residual nonzero");
  auto e = ext_class_rep(h, d);
  check(e.form == Q(-2) * h.mul(h.element("a"), h.element("c")), "Heisenberg class is not -2 a^c");
  check(is_exact(h, e.form, 2, 0).kind == ExactnessVerdict::Kind::not_exact, "Heisenberg class reported exact");
}

void codim2(Sampler&) {
  auto m = trivial_rank2_base();
  McData d;
  d.k = 2;
  d.mode = CoefficientMode::trivial;
  d.l = 2;
  auto eta = zero_valued(m, 2, 2);
  eta.parts[static_cast<std::size_t>(m.index_of("alpha"))] = PolyVector::monomial(2, 1, MultiIndex({2, 0}), Q(1));
  eta.parts[static_cast<std::size_t>(m.index_of("beta"))] = PolyVector::monomial(2, 1, MultiIndex({1, 1}), Q(1));
  eta.parts[static_cast<std::size_t>(m.index_of("gamma"))] = PolyVector::monomial(2, 1, MultiIndex({0, 2}), Q(1));
  d.valued = {eta};
  auto e = ext_class_rep(m, d).valued;
  auto part = [&](const char* a, const char* b) {
    auto i = m.mul(m.element(a), m.element(b));
    for (std::size_t j = 0; j < i.size(); ++j)
      if (!i[j].is_zero()) return e.parts[j];
    throw Failure("missing product");
  };
  check(part("alpha", "beta") == PolyVector::monomial(2, 1, MultiIndex({3, 0}), Q(1)), "alpha^beta coefficient");
  check(part("alpha", "gamma") == PolyVector::monomial(2, 1, MultiIndex({2, 1}), Q(2)), "alpha^gamma coefficient");
  check(part("beta", "gamma") == PolyVector::monomial(2, 1, MultiIndex({1, 2}), Q(1)), "beta^gamma coefficient");
}

void classification(Sampler& s) {
  for (int g = 1; g <= 3; ++g) {
    auto r = classify_b4(surface_presentation(g), std::vector<Scalar>(static_cast<std::size_t>(2 * g), Q(1)));
    check(r.sphere_dim == static_cast<std::size_t>(4 * g - 1), "sphere dimension for genus " + std::to_string(g));
  }
  std::uniform_real_distribution<double> unit(-1, 1), logt(std::log(0.01), std::log(100.0));
  for (int n = 0; n < 200; ++n) {
    std::vector<double> u(2), v(3);
    for (auto& x : u) x = unit(s.engine());
    for (auto& x : v) x = unit(s.engine());
    double t = std::exp(logt(s.engine()));
    auto su = u, sv = v;
    for (auto& x : su) x /= t;
    for (auto& x : sv) x /= t * t;
    auto a = normalize_orbit(u, v), b = normalize_orbit(su, sv);
    for (std::size_t i = 0; i < u.size(); ++i) check(std::abs(a.u[i] - b.u[i]) <= 1e-12, "orbit normalization not invariant");
    for (std::size_t i = 0; i < v.size(); ++i) check(std::abs(a.v[i] - b.v[i]) <= 1e-12, "orbit normalization not invariant");
  }
}

void round_trip(Sampler& s) {
  using namespace io;
  for (int n = 0; n < 10; ++n) {
    auto g = s.jet(s.integer(1, 3), s.integer(1, 4));
    check(jetmap_from_json(Json::parse(dump(to_json(g)))) == g, "JetMap round trip");
    auto v = s.polyvector(2, 1, 3);
    check(polyvector_from_json(Json::parse(dump(to_json(v)))) == v, "PolyVector round trip");
    auto c = levy_decompose(s.jet(2, 3));
    check(levy_from_json(Json::parse(dump(to_json(c)))) == c, "LevyCoords round trip");
    auto r = torus_rep(s, false);
    check(representation_from_json(Json::parse(dump(to_json(r))), Field::rational) == r, "Representation round trip");
  }
  Sampler fs(s.engine()(), Field::real);
  auto gf = fs.jet(2, 3);
  check(jetmap_from_json(Json::parse(dump(to_json(gf)))) == gf, "float JetMap round trip");
  for (const char* name : {"heisenberg", "surface", "mapping_torus", "trivial_rank2"}) {
    auto m = build_model(name, {}, Field::rational);
    auto text = dump(to_json(m));
    check(dump(to_json(model_from_json(Json::parse(text), Field::rational))) == text, std::string("model round trip ") + name);
  }
}

const std::vector<std::pair<std::string, Property>>& properties() {
  static const std::vector<std::pair<std::string, Property>> all = {
      {"cdga.codim2_pattern", codim2},
      {"cdga.heisenberg", heisenberg},
      {"charvar.classification", classification},
      {"fpgroup.d1_crossed_extension", crossed_vs_d1},
      {"io.round_trip", round_trip},
      {"jetcore.group_axioms", group_axioms},
      {"jetgroup.bracket_identities", bracket_identities},
      {"jetgroup.chart_laws", chart_laws},
      {"jetgroup.cocycle", cocycle},
      {"jetgroup.dilation", dilation},
      {"jetgroup.exp_log", exp_log},
      {"obstruction.conjugation", conjugation},
      {"obstruction.extension_space", extension_space},
      {"obstruction.h1_table", h1_table},
      {"obstruction.surface_quadric", surface_quadric},
  };
  return all;
}

}  // namespace

std::vector<std::string> selftest_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : properties()) out.push_back(name);
  return out;
}

std::vector<PropertyResult> run_selftest(std::uint64_t seed, unsigned jobs) {
  const auto& props = properties();
  std::vector<PropertyResult> results(props.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < props.size();) {
      auto& r = results[i];
      r.name = props[i].first;
      Sampler s(seed * 1000003u + i);
      auto t0 = std::chrono::steady_clock::now();
      try {
        props[i].second(s);
        r.passed = true;
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(props.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return results;
}

std::string junit_xml(const std::vector<PropertyResult>& results) {
  auto escape = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      switch (c) {
        case '&': o += "&amp;"; break;
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '"': o += "&quot;"; break;
        default: o += c;
      }
    }
    return o;
  };
  std::size_t failures = 0;
  double total = 0;
  for (const auto& r : results) {
    failures += r.passed ? 0 : 1;
    total += r.seconds;
  }
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"jetfol.selftest\" tests=\"" << results.size() << "\" failures=\"" << failures
     << "\" time=\"" << total << "\">\n";
  for (const auto& r : results) {
    os << "  <testcase classname=\"selftest\" name=\"" << escape(r.name) << "\" time=\"" << r.seconds << "\"";
    if (r.passed)
      os << "/>\n";
    else
      os << ">\n    <failure message=\"" << escape(r.detail) << "\"/>\n  </testcase>\n";
  }
  os << "</testsuite>\n";
  return os.str();
}

}  // namespace jetfol
