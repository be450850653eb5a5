// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "jetfol/cdga.hpp"
#include "jetfol/charvar.hpp"
#include "jetfol/io.hpp"
#include "jetfol/obstruction.hpp"
#include "jetfol/random.hpp"
#include "oracle.hpp"

using namespace jetfol;
namespace fs = std::filesystem;

namespace {

const Field R = Field::rational;
Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }

// Time limits and tolerances.
constexpr double kAxiomSeconds = 10.0;
constexpr double kHeisenbergSeconds = 1.0;
constexpr double kSphereTolerance = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1 -------------------------------------------------------------------

Outcome axioms() {
  Check c;
  Sampler s(1001);
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 5; ++k) {
      std::vector<JetDiffeo> jets;
      for (int n = 0; n < 200; ++n) jets.push_back(s.jet(l, k));
      const auto id = JetDiffeo::identity(l, k, R);
      for (std::size_t i = 0; i < jets.size(); ++i) {
        const auto& f = jets[i];
        const auto& g = jets[(i + 1) % jets.size()];
        const auto& h = jets[(i + 2) % jets.size()];
        const auto fg = compose(f, g);
        c.expect(compose(fg, h) == compose(f, compose(g, h)), "associativity");
        const auto fi = invert(f);
        c.expect(compose(f, fi) == id && compose(fi, f) == id, "two-sided inverse");
        for (int k2 = 1; k2 < k; ++k2)
          c.expect(truncate(fg, k2) == compose(truncate(f, k2), truncate(g, k2)), "truncation homomorphism");
        ++checked;
      }
    }
  const double secs = seconds_since(t0);
  c.expect(secs < kAxiomSeconds, "runtime " + std::to_string(secs) + " s");
  c.note(std::to_string(checked) + " jets, " + std::to_string(secs) + " s");
  return c.result();
}

// ---- 2 -------------------------------------------------------------------

Outcome chart_laws() {
  Check c;
  Sampler s(1002);
  for (int n = 0; n < 100; ++n) {
    auto a = s.g31(), b = s.g31();
    G31Coords expect{a.a1 + b.a1 / a.a0, a.a2 + b.a2 / (a.a0 * a.a0), a.a0 * b.a0};
    c.expect(chart_g31(compose(from_chart_g31(a, R), from_chart_g31(b, R))) == expect, "G31 product");
  }
  for (int n = 0; n < 100; ++n) {
    const int l = s.integer(1, 3);
    G2lCoords a{s.polyvector(l, 2, 2), s.invertible_matrix(l)}, b{s.polyvector(l, 2, 2), s.invertible_matrix(l)};
    // A1(k2) as the substitution x -> A1 k2(A1^{-1} x), through the schoolbook oracle
    auto sandwich = oracle::compose(oracle::compose(JetMap::linear(a.a, 2), identity_plus(b.k, 2)),
                                    JetMap::linear(*inverse(a.a), 2));
    auto moved = minus_identity(sandwich, 2, 2);
    auto prod = chart_g2l(JetDiffeo(oracle::compose(from_chart_g2l(a), from_chart_g2l(b))));
    c.expect(prod.k == a.k + moved, "G2l translation part");
    c.expect(prod.a == a.a * b.a, "G2l linear part");
  }
  c.note("100 + 100 pairs");
  return c.result();
}

// ---- 3 -------------------------------------------------------------------

Outcome exp_log() {
  Check c;
  Sampler s(1003);
  int n_checked = 0;
  for (int l = 1; l <= 3; ++l)
    for (int k = 2; k <= 5; ++k)
      for (int n = 0; n < 5; ++n) {
        auto x = s.polyvector(l, 2, k, 0.3);
        c.expect(log_jet(exp_jet(x, k)) == x, "log(exp x) = x");
        auto u = s.unipotent(l, k, 0.3);
        c.expect(exp_jet(log_jet(u), k) == u, "exp(log u) = u");
        ++n_checked;
      }
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n < 50; ++n) {
      auto x = s.polyvector(1, 2, k), y = s.polyvector(1, 2, k);
      c.expect(compose(exp_jet(x, k), exp_jet(y, k)) == exp_jet(x + y, k), "exp additivity");
    }
  c.note(std::to_string(n_checked) + " round trips, 100 additivity pairs");
  return c.result();
}

// ---- 4 -------------------------------------------------------------------

Outcome heisenberg() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto h = heisenberg_model();
  McData data;
  data.k = 4;
  data.eta = {h.element("a"), h.element("b"), Q(-1) * h.element("c")};
  auto mc = mc_check(h, data);
  for (const auto& r : mc.residuals) c.expect(is_zero(r), "MC residual");
  auto e = ext_class_rep(h, data);
  c.expect(e.form == Q(-2) * h.element("a^c"), "extension class -2 a^c");
  auto v = is_exact(h, e.form, 2, e.weight);
  c.expect(v.kind == ExactnessVerdict::Kind::not_exact, "verdict");
  c.expect(v.certificate.has_value(), "certificate present");
  if (v.certificate) {
    // y kills d(degree-1) and pairs nontrivially with the class
    auto rows = h.block(2, e.weight), cols = h.block(1, e.weight);
    for (int col : cols) {
      auto dc = h.d_twisted(unit_vector(h.dim(), static_cast<std::size_t>(col), R), e.weight);
      Scalar acc = Q(0);
      for (std::size_t r = 0; r < rows.size(); ++r)
        acc += v.certificate->row_combination[r] * dc[static_cast<std::size_t>(rows[r])];
      c.expect(acc.is_zero(), "certificate annihilates the image");
    }
    Scalar pair = Q(0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      pair += v.certificate->row_combination[r] * e.form[static_cast<std::size_t>(rows[r])];
    c.expect(!pair.is_zero(), "certificate pairs with the class");
  }
  const double secs = seconds_since(t0);
  c.expect(secs < kHeisenbergSeconds, "runtime");
  c.note("class " + h.format(e.form) + ", " + std::to_string(secs) + " s");
  return c.result();
}

// ---- 5 -------------------------------------------------------------------

Outcome surface_quadric() {
  Check c;
  Sampler s(1005);
  std::optional<Scalar> ratio;
  int liftable = 0, obstructed = 0;
  for (int genus = 1; genus <= 2; ++genus) {
    auto model = surface_model(genus);
    const auto g = static_cast<std::size_t>(genus);
    for (int n = 0; n < 200; ++n) {
      auto x = s.scalars(g), y = s.scalars(g), w = s.scalars(g), z = s.scalars(g);
      if (n % 4 == 0) {
        x[0] = s.nonzero_scalar();
        Scalar rest = Q(0);
        for (std::size_t i = 1; i < g; ++i) rest += x[i] * z[i] - y[i] * w[i];
        z[0] = (y[0] * w[0] - rest) / x[0];
      }
      Scalar q = Q(0);
      for (std::size_t i = 0; i < g; ++i) q += x[i] * z[i] - y[i] * w[i];
      auto lift = lift_obstruction(surface_rep_bridge(genus, x, y, w, z));
      c.expect(lift.liftable == q.is_zero(), "liftable iff quadric vanishes");
      auto e = ext_class_rep(model, surface_mc_data(model, x, y, w, z));
      c.expect((is_exact(model, e.form, 2, 0).kind == ExactnessVerdict::Kind::exact) == q.is_zero(),
               "de Rham verdict iff quadric vanishes");
      if (q.is_zero()) {
        ++liftable;
        continue;
      }
      ++obstructed;
      auto r = lift.defects.front().coordinates(4)[0] / q;
      if (!ratio) ratio = r;
      c.expect(*ratio == r, "defect / quadric is constant");
    }
  }
  c.expect(ratio.has_value() && !ratio->is_zero(), "nonzero ratio");
  c.note(std::to_string(liftable) + " liftable, " + std::to_string(obstructed) + " obstructed, defect/quadric = " +
         (ratio ? ratio->str() : "n/a"));
  return c.result();
}

// ---- 6 -------------------------------------------------------------------

Scalar top(const JetDiffeo& a, const JetDiffeo& b) { return alpha_cocycle(a, b).coeff(0, MultiIndex({4})); }

Outcome cocycle() {
  Check c;
  Sampler s(1006);
  for (int n = 0; n < 100; ++n) {
    auto c1 = from_chart_g31(s.g31(), R), c2 = from_chart_g31(s.g31(), R), c3 = from_chart_g31(s.g31(), R);
    // g acts on t^4 d/dt through a0^{-3}
    const Scalar a0 = chart_g31(c1).a0;
    const Scalar act = (a0 * a0 * a0).inverse();
    auto delta = act * top(c2, c3) - top(compose(c1, c2), c3) + top(c1, compose(c2, c3)) - top(c1, c2);
    c.expect(delta.is_zero(), "delta alpha = 0");
    c.expect(alpha_cocycle(c1, c2).max_degree() == 4 && alpha_cocycle(c1, c2).min_degree() == 4, "top layer");
  }
  for (int n = 0; n < 100; ++n) {
    auto a = s.g31(), b = s.g31();
    auto half = Q(1, 2);
    auto expect = half * (b.a1 * a.a2 / a.a0 - a.a1 * b.a2 / (a.a0 * a.a0));
    c.expect(top(from_chart_g31(a, R), from_chart_g31(b, R)) == expect, "closed form");
    c.expect(e41_closed_form(a, b) == expect, "e41_closed_form");
  }
  c.note("100 triples, 100 pairs");
  return c.result();
}

// ---- 7 -------------------------------------------------------------------

bool in_column_space(const Matrix& m, const Vector& v) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m.cols(); ++i) cols.push_back(m.column(i));
  cols.push_back(v);
  return rank(Matrix::from_columns(cols, R, v.size())) == rank(m);
}

JetDiffeo power(const JetDiffeo& g, int n) {
  JetDiffeo acc = JetDiffeo::identity(g.l(), g.k(), g.field());
  const JetDiffeo step = n >= 0 ? g : invert(g);
  for (int i = 0; i < std::abs(n); ++i) acc = compose(acc, step);
  return acc;
}

Outcome equivariance() {
  Check c;
  Sampler s(1007);
  const auto torus = builtin_presentation("torus");
  int obstructed = 0;
  for (int n = 0; n < 50; ++n) {
    std::vector<JetDiffeo> imgs;
    if (n % 2 == 0) {
      imgs = {from_chart_g31({s.scalar(), s.scalar(), Q(1)}, R), from_chart_g31({s.scalar(), s.scalar(), Q(1)}, R)};
    } else {
      auto g = from_chart_g31(s.g31(), R);
      imgs = {power(g, s.integer(-2, 2)), power(g, s.integer(-2, 2))};
    }
    Representation r(torus, imgs);
    auto g = from_chart_g31(s.g31(), R);
    auto rc = conjugate_rep(g, r);
    auto a = lift_obstruction(r), b = lift_obstruction(rc);
    c.expect(a.liftable == b.liftable, "liftability invariant");
    auto moved = layer_action(g.linear_part(), 4) * a.defect_vector;
    c.expect(in_column_space(b.d1, b.defect_vector - moved), "defect difference in im d1");
    obstructed += a.liftable ? 0 : 1;
  }
  c.note("50 pairs, " + std::to_string(obstructed) + " obstructed");
  return c.result();
}

// ---- 8 -------------------------------------------------------------------

Outcome h1_table() {
  Check c;
  c.expect(twisted_h1(builtin_presentation("circle"), ModuleAction::trivial(1, 1, R)).h1 == 1, "circle trivial");
  c.expect(twisted_h1(builtin_presentation("circle"), ModuleAction::scalar({Q(2)})).h1 == 0, "circle lambda=2");
  c.expect(twisted_h1(builtin_presentation("torus"), ModuleAction::trivial(2, 1, R)).h1 == 2, "torus trivial");
  for (int g = 1; g <= 3; ++g)
    c.expect(twisted_h1(surface_presentation(g), ModuleAction::trivial(2 * g, 1, R)).h1 == static_cast<std::size_t>(2 * g),
             "genus " + std::to_string(g));
  c.note("1, 0, 2, 2, 4, 6");
  return c.result();
}

// ---- 9 -------------------------------------------------------------------

// t^4 coefficient of x~ y~ - y~ x~ with x~ = x + u t^4, y~ = y + v t^4 (coefficient padding).
mpq_class commutator_top(const JetDiffeo& x, const JetDiffeo& y, const mpq_class& u, const mpq_class& v, bool& lower_ok) {
  auto pad = [](const JetDiffeo& g, const mpq_class& top) {
    auto j = oracle::from_library(g);
    j.k = 4;
    if (top != 0) j.comp[0][{4}] = top;
    return j;
  };
  auto a = pad(x, u), b = pad(y, v);
  auto ab = oracle::compose(a, b), ba = oracle::compose(b, a);
  oracle::Poly diff = ab.comp[0];
  for (const auto& [e, q] : ba.comp[0]) oracle::add_to(diff, e, -q);
  lower_ok = true;
  for (const auto& [e, q] : diff)
    if (e[0] < 4) lower_ok = false;
  auto it = diff.find({4});
  return it == diff.end() ? mpq_class(0) : it->second;
}

Outcome extension_space() {
  Check c;
  std::string summary;
  for (auto [name, xs, ys] : {std::tuple{"flat", G31Coords{Q(1), Q(1), Q(1)}, G31Coords{Q(2), Q(2), Q(1)}},
                              std::tuple{"q1", G31Coords{Q(1), Q(0), Q(1)}, G31Coords{Q(0), Q(1), Q(1)}}}) {
    auto x = from_chart_g31(xs, R), y = from_chart_g31(ys, R);
    Representation r(builtin_presentation("torus"), {x, y});
    bool ok = true;
    // L(u, v) = c0 + cu u + cv v; check affinity on further points
    const mpq_class c0 = commutator_top(x, y, 0, 0, ok);
    const mpq_class cu = commutator_top(x, y, 1, 0, ok) - c0;
    const mpq_class cv = commutator_top(x, y, 0, 1, ok) - c0;
    c.expect(ok, std::string(name) + ": lower orders commute");
    for (auto [u, v] : {std::pair{mpq_class(3, 2), mpq_class(-7)}, std::pair{mpq_class(-5), mpq_class(2, 9)}})
      c.expect(commutator_top(x, y, u, v, ok) == c0 + cu * u + cv * v, "relator equation is affine");
    const bool brute_solvable = !(cu == 0 && cv == 0 && c0 != 0);
    const int brute_dim = !brute_solvable ? -1 : (cu == 0 && cv == 0 ? 2 : 1);

    auto lift = lift_obstruction(r);
    c.expect(lift.liftable == brute_solvable, std::string(name) + ": solvability");
    if (!lift.liftable) {
      summary += std::string(name) + " empty; ";
      continue;
    }
    auto es = enumerate_lifts(r);
    c.expect(static_cast<int>(es.z1_basis.size()) == brute_dim, std::string(name) + ": dimension");
    auto base_top = [&](int g) {
      return oracle::from_library(es.base_lift.image(g)).comp[0][{4}];
    };
    c.expect(c0 + cu * base_top(0) + cv * base_top(1) == 0, "base lift solves the brute-force equation");
    for (const auto& z : es.z1_basis) c.expect(cu * z[0].q() + cv * z[1].q() == 0, "Z1 direction solves it");
    c.expect(es.h1_dim == 2, "H1 = 2");
    summary += std::string(name) + " dim " + std::to_string(es.z1_basis.size()) + ", H1 " + std::to_string(es.h1_dim) + "; ";
  }
  c.note(summary);
  return c.result();
}

// ---- 10 ------------------------------------------------------------------

Outcome codim2() {
  Check c;
  auto m = trivial_rank2_base();
  McData d;
  d.k = 2;
  d.mode = CoefficientMode::trivial;
  d.l = 2;
  ValuedForm eta = zero_valued(m, 2, 2);
  auto at = [&](ValuedForm& f, const char* name) -> PolyVector& { return f.parts[static_cast<std::size_t>(m.index_of(name))]; };
  at(eta, "alpha") = PolyVector::monomial(2, 1, MultiIndex({2, 0}), Q(1));
  at(eta, "beta") = PolyVector::monomial(2, 1, MultiIndex({1, 1}), Q(1));
  at(eta, "gamma") = PolyVector::monomial(2, 1, MultiIndex({0, 2}), Q(1));
  d.valued = {eta};
  c.expect(mc_check(m, d).holds(), "MC");
  auto e = ext_class_rep(m, d);
  c.expect(at(e.valued, "alpha^beta") == PolyVector::monomial(2, 1, MultiIndex({3, 0}), Q(1)), "alpha^beta x^3 dy");
  c.expect(at(e.valued, "alpha^gamma") == PolyVector::monomial(2, 1, MultiIndex({2, 1}), Q(2)), "2 alpha^gamma x^2y dy");
  c.expect(at(e.valued, "beta^gamma") == PolyVector::monomial(2, 1, MultiIndex({1, 2}), Q(1)), "beta^gamma xy^2 dy");
  for (const char* other : {"1", "alpha", "beta", "gamma", "alpha^beta^gamma"}) c.expect(at(e.valued, other).is_zero(), "no other terms");
  c.note("(alpha^beta, 2 alpha^gamma, beta^gamma) on (x^3, x^2y, xy^2) dy");
  return c.result();
}

// ---- 11 ------------------------------------------------------------------

Outcome classification() {
  Check c;
  std::string dims;
  for (int g = 1; g <= 3; ++g) {
    auto r = classify_b4(surface_presentation(g), std::vector<Scalar>(static_cast<std::size_t>(2 * g), Q(1)));
    c.expect(r.sphere_dim == static_cast<std::size_t>(4 * g - 1), "sphere dimension genus " + std::to_string(g));
    dims += r.stratum() + " ";
  }
  std::mt19937_64 rng(1011);
  std::uniform_real_distribution<double> coord(-3, 3), logscale(-3, 3);
  std::uniform_int_distribution<int> len(0, 4);
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    std::vector<double> u(static_cast<std::size_t>(len(rng))), v(static_cast<std::size_t>(len(rng)) + 1);
    for (double& x : u) x = coord(rng);
    for (double& x : v) x = coord(rng);
    const double t = std::exp(logscale(rng));
    auto a = normalize_orbit(u, v);
    auto us = u, vs = v;
    for (double& x : us) x *= std::sqrt(t);
    for (double& x : vs) x *= t;
    auto b = normalize_orbit(us, vs);
    double norm = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      worst = std::max(worst, std::abs(a.u[i] - b.u[i]));
      norm += a.u[i] * a.u[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
      norm += a.v[i] * a.v[i];
    }
    worst = std::max(worst, std::abs(norm - 1));
  }
  c.expect(worst <= kSphereTolerance, "scale invariance");
  std::ostringstream w;
  w << dims << "max deviation " << worst;
  c.note(w.str());
  return c.result();
}

// ---- 12 ------------------------------------------------------------------

Outcome dilation() {
  Check c;
  Sampler s(1012);
  for (int n = 0; n < 100; ++n) {
    const int l = s.integer(1, 3), k = s.integer(1, 4);
    auto g = s.jet(l, k), h = s.jet(l, k);
    c.expect(dilation_homotopy(Q(1), g) == g, "h1 = id");
    c.expect(dilation_homotopy(Q(0), g) == JetDiffeo::linear(g.linear_part(), k), "h0 = j pi");
    Scalar t = Q(s.integer(1, 9), s.integer(1, 4));
    c.expect(dilation_homotopy(t, compose(g, h)) == compose(dilation_homotopy(t, g), dilation_homotopy(t, h)), "homomorphism");
    auto d = dilation_jet(t.inverse(), l, k), di = dilation_jet(t, l, k);
    c.expect(dilation_homotopy(t, g) == JetDiffeo(oracle::compose(oracle::compose(d, g), di)), "conjugation formula");
  }
  c.note("100 elements");
  return c.result();
}

// ---- 13 ------------------------------------------------------------------

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const auto dir = fs::temp_directory_path() / ("jetfol_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = dir / "out.txt";
  const std::string cmd = std::string(JETFOL_EXE) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write_tmp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("jetfol_accept_" + std::to_string(::getpid())) / name;
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
  return p.string();
}

Outcome cli() {
  Check c;
  const std::string data = JETFOL_DATA;
  Sampler s(1013);
  for (int n = 0; n < 10; ++n) {
    auto g = s.jet(s.integer(1, 3), s.integer(1, 4));
    auto text = io::dump(io::to_json(g));
    c.expect(io::dump(io::to_json(io::jetdiffeo_from_json(io::Json::parse(text)))) == text, "library round trip");
    auto id = io::dump(io::to_json(JetDiffeo::identity(g.l(), g.k(), R)));
    auto r = run_cli("compose " + write_tmp("g.json", text) + " " + write_tmp("id.json", id));
    c.expect(r.code == 0 && r.out == text, "CLI round trip");
  }
  c.expect(run_cli("lift --rep " + data + "/torus_flat.json").code == 0, "exit 0");
  c.expect(run_cli("lift --rep " + data + "/torus_q1.json").code == 1, "exit 1");
  auto bad = write_tmp("bad.json", R"({"presentation":"torus","k":3,"l":1,"images":{"x":["1","0","1"],"y":["0","1/0","1"]}})");
  c.expect(run_cli("lift --rep " + bad).code == 2, "exit 2");
  c.expect(run_cli("selftest").code == 0, "selftest");
  c.note("round trips, exit codes 0/1/2, selftest");
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"jet-group axioms", axioms},
      {"chart laws", chart_laws},
      {"exp/log", exp_log},
      {"Heisenberg class", heisenberg},
      {"surface quadric cross-check", surface_quadric},
      {"cocycle suite", cocycle},
      {"conjugation equivariance", equivariance},
      {"twisted H1 table", h1_table},
      {"extension space", extension_space},
      {"codimension-2 pattern", codim2},
      {"classification", classification},
      {"dilation homotopy", dilation},
      {"command line", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
