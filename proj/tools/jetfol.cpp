// jetfol: command-line front end for the jet-group, obstruction and
// classification computations. Reports go to stdout as canonical JSON.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jetfol/cdga.hpp"
#include "jetfol/charvar.hpp"
#include "jetfol/io.hpp"
#include "jetfol/obstruction.hpp"
#include "jetfol/selftest.hpp"

namespace fs = std::filesystem;
using namespace jetfol;
using io::Json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2, kInternalError = 3;

struct Globals {
  std::string field = "rational";
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
  std::string report_xml;
  std::string model;
  std::vector<std::string> params;
  std::string presentation;
  bool expect_liftable = true;
  bool table = false;

  Field f() const { return parse_field(field); }
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << io::dump(j); }

Json load(const std::string& path) {
  if (path.empty()) throw InputError("missing input file");
  return io::read_json_file(path);
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

JetDiffeo load_diffeo(const std::string& path) { return io::jetdiffeo_from_json(load(path), path); }

Representation load_rep(const std::string& path, const Globals& g) {
  return io::representation_from_json(load(path), g.f(), dir_of(path), path);
}

Presentation load_presentation(const Globals& g) {
  if (g.presentation.empty()) throw InputError("--presentation is required (builtin name or file)");
  return io::resolve_presentation(g.presentation);
}

CdgaModel load_model(const Globals& g) {
  if (g.model.empty()) throw InputError("--model is required (builtin name or file)");
  std::map<std::string, std::string> params;
  for (const auto& kv : g.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (fs::exists(g.model) && fs::is_regular_file(g.model)) {
    if (!params.empty()) throw InputError("--param only applies to builtin models");
    return io::model_from_json(load(g.model), g.f(), g.model);
  }
  try {
    return build_model(g.model, params, g.f());
  } catch (const std::invalid_argument& e) {
    throw io::ParseError("--model", e.what());
  }
}

std::vector<Scalar> parse_list(const std::string& text, Field f, const std::string& what) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Scalar::parse(f, item));
    } catch (const std::exception& e) {
      throw io::ParseError(what, e.what());
    }
  }
  return out;
}

Word parse_word_arg(const Presentation& p, const std::string& text) {
  std::vector<std::string> letters;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) letters.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) letters.push_back(cur);
  try {
    return p.parse_word(letters);
  } catch (const std::invalid_argument& e) {
    throw io::ParseError("--word", e.what());
  }
}

void print_classify_table(const ClassifyReport& r) {
  std::cout << std::left << std::setw(14) << "b1(w=-1)" << r.betti.b1_w1 << "\n"
            << std::setw(14) << "b1(w=-2)" << r.betti.b1_w2 << "\n"
            << std::setw(14) << "stratum" << r.stratum() << "\n"
            << std::setw(14) << "zero point" << r.zero_point_note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jetfol: jets of foliations along submanifolds, computed exactly"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Coefficient field")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--seed", g.seed, "Seed for randomized property checks");
  app.add_option("--jobs", g.jobs, "Worker threads for property sweeps")->check(CLI::Range(1u, 256u));
  app.add_option("--report-xml", g.report_xml, "Write a JUnit-style XML summary (selftest)");
  app.add_option("--model", g.model, "Builtin model name or model file");
  app.add_option("--param", g.params, "Builtin model parameter key=value (repeatable)");
  app.add_option("--presentation", g.presentation, "Builtin presentation (circle, torus, surface:g, heisenberg) or file");
  app.add_option("--expect-liftable", g.expect_liftable, "Expected lift verdict; a mismatch exits with 1 (default true)");
  app.add_flag("--table", g.table, "Human-readable table instead of JSON where available");

  std::string f_path, g_path, x_path, y_path, rep_path, mc_path, form_path, rho_path, periods_path, word_text, coords,
      u_text, v_text, section = "exp";
  int k_opt = 0, degree = 0, weight = 0, genus = 1;

  auto* compose_cmd = app.add_subcommand("compose", "f∘g of two jets (g applied first)");
  compose_cmd->add_option("f", f_path)->required();
  compose_cmd->add_option("g", g_path)->required();
  auto* invert_cmd = app.add_subcommand("invert", "Inverse of a jet diffeomorphism");
  invert_cmd->add_option("f", f_path)->required();
  auto* chart_cmd = app.add_subcommand("chart", "Chart coordinates of a jet, or the jet of chart coordinates");
  chart_cmd->add_option("jet", f_path, "Jet file (l = 1 with k <= 3, or k = 2)");
  chart_cmd->add_option("--coords", coords, "Comma list c1,...,c_{k-1},c0 for l = 1");
  chart_cmd->add_option("--k", k_opt, "Order for --coords")->check(CLI::Range(1, 3));
  auto* exp_cmd = app.add_subcommand("exp", "exp of a nilpotent vector field");
  exp_cmd->add_option("x", x_path)->required();
  exp_cmd->add_option("--k", k_opt, "Target order (default: top degree of X)");
  auto* log_cmd = app.add_subcommand("log", "log of a unipotent jet");
  log_cmd->add_option("u", f_path)->required();
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two vector fields");
  bracket_cmd->add_option("x", x_path)->required();
  bracket_cmd->add_option("y", y_path)->required();
  auto* word_cmd = app.add_subcommand("word", "Evaluate a word on a representation");
  word_cmd->add_option("--rep", rep_path)->required();
  word_cmd->add_option("--word", word_text, "Letters separated by spaces or commas, inverses as g^-1")->required();
  auto* validate_cmd = app.add_subcommand("validate", "Check that generator images satisfy the relators");
  validate_cmd->add_option("--rep", rep_path)->required();
  auto* h1_cmd = app.add_subcommand("h1", "Twisted first cohomology of a presentation");
  h1_cmd->add_option("--rep", rep_path, "Representation: acts on the weight-degree layer");
  h1_cmd->add_option("--degree", degree, "Layer degree for --rep (default k+1)");
  h1_cmd->add_option("--rho0", rho_path, "Scalar character file {\"values\":{...}}");
  h1_cmd->add_option("--weight", weight, "Module acts by rho0(g)^weight")->default_val(1);
  auto* lift_cmd = app.add_subcommand("lift", "Obstruction to extending a representation one order");
  lift_cmd->add_option("--rep", rep_path)->required();
  lift_cmd->add_option("--section", section, "Set-theoretic section")->check(CLI::IsMember({"exp", "poly"}));
  auto* lifts_cmd = app.add_subcommand("lifts", "Affine space of one-order extensions");
  lifts_cmd->add_option("--rep", rep_path)->required();
  auto* mc_cmd = app.add_subcommand("mc-check", "Maurer–Cartan residuals on a model");
  mc_cmd->add_option("--mc", mc_path)->required();
  auto* ext_cmd = app.add_subcommand("ext-class", "Extension class representative");
  ext_cmd->add_option("--mc", mc_path)->required();
  auto* exact_cmd = app.add_subcommand("exact", "Decide exactness of the extension class or a given form");
  exact_cmd->add_option("--mc", mc_path, "Maurer–Cartan data; tests its extension class");
  exact_cmd->add_option("--form", form_path, "Element file {\"degree\":d,\"weight\":w,\"form\":{name: coeff}}");
  auto* bridge_cmd = app.add_subcommand("bridge", "Compare group and de Rham obstructions on a surface");
  bridge_cmd->add_option("--genus", genus)->check(CLI::Range(1, 64));
  bridge_cmd->add_option("--periods", periods_path, "{\"x\":[..],\"y\":[..],\"w\":[..],\"z\":[..]}")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Codimension-1 classification for k <= 3");
  classify_cmd->add_option("--rho0", rho_path)->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Weighted-sphere representative of an orbit");
  normalize_cmd->add_option("--u", u_text, "Comma list (weight -1 part)");
  normalize_cmd->add_option("--v", v_text, "Comma list (weight -2 part)");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Field f = g.f();
    if (*compose_cmd) {
      auto a = io::jetmap_from_json(load(f_path), f_path);
      auto b = io::jetmap_from_json(load(g_path), g_path);
      if (a.l() != b.l() || a.k() != b.k() || a.field() != b.field()) throw InputError("jets differ in l, k or field");
      emit(io::to_json(compose(a, b)));
    } else if (*invert_cmd) {
      emit(io::to_json(invert(load_diffeo(f_path))));
    } else if (*chart_cmd) {
      if (!coords.empty()) {
        auto c = parse_list(coords, f, "--coords");
        if (k_opt != 0 && c.size() != static_cast<std::size_t>(k_opt)) throw InputError("--coords length differs from --k");
        emit(io::to_json(from_chart_l1(c)));
      } else {
        auto j = load_diffeo(f_path);
        if (j.l() == 1 && j.k() == 3) {
          auto c = chart_g31(j);
          emit(Json{{"chart", "G31"}, {"a1", c.a1.str()}, {"a2", c.a2.str()}, {"a0", c.a0.str()}});
        } else if (j.k() == 2) {
          auto c = chart_g2l(j);
          emit(Json{{"chart", "G2l"}, {"K", io::to_json(c.k)}, {"A", io::to_json(c.a)}});
        } else if (j.l() == 1) {
          Json arr = Json::array();
          for (const auto& s : chart_l1(j)) arr.push_back(s.str());
          emit(Json{{"chart", "l1"}, {"coords", arr}});
        } else {
          throw InputError("no chart for l = " + std::to_string(j.l()) + ", k = " + std::to_string(j.k()));
        }
      }
    } else if (*exp_cmd) {
      auto x = io::polyvector_from_json(load(x_path), x_path);
      emit(io::to_json(exp_jet(x, k_opt > 0 ? k_opt : x.max_degree())));
    } else if (*log_cmd) {
      emit(io::to_json(log_jet(load_diffeo(f_path))));
    } else if (*bracket_cmd) {
      auto x = io::polyvector_from_json(load(x_path), x_path);
      auto y = io::polyvector_from_json(load(y_path), y_path);
      emit(io::to_json(bracket(x, y)));
    } else if (*word_cmd) {
      auto in = io::representation_input_from_json(load(rep_path), f, dir_of(rep_path), rep_path);
      emit(io::to_json(evaluate_word(parse_word_arg(in.presentation, word_text), in.images)));
    } else if (*validate_cmd) {
      auto in = io::representation_input_from_json(load(rep_path), f, dir_of(rep_path), rep_path);
      auto rep = validate_rep(in.presentation, in.images);
      emit(io::to_json(rep));
      return rep.valid ? kOk : kCheckFailed;
    } else if (*h1_cmd) {
      if (!rep_path.empty()) {
        auto r = load_rep(rep_path, g);
        emit(io::to_json(twisted_h1(r.presentation(), module_action_for(r, degree > 0 ? degree : r.k() + 1))));
      } else {
        auto p = load_presentation(g);
        if (rho_path.empty()) {
          emit(io::to_json(twisted_h1(p, ModuleAction::trivial(p.rank(), 1, f))));
        } else {
          auto rho = io::rho0_from_json(load(rho_path), p, f, rho_path);
          for (auto& s : rho) {
            if (s.is_zero()) throw io::ParseError(rho_path, "character values must be nonzero");
            s = s.pow(weight);
          }
          emit(io::to_json(twisted_h1(p, ModuleAction::scalar(rho))));
        }
      }
    } else if (*lift_cmd) {
      auto r = load_rep(rep_path, g);
      auto rep = lift_obstruction(r, section == "exp" ? Section::exponential : Section::polynomial);
      emit(io::to_json(rep, r.presentation()));
      return rep.liftable == g.expect_liftable ? kOk : kCheckFailed;
    } else if (*lifts_cmd) {
      auto r = load_rep(rep_path, g);
      auto rep = lift_obstruction(r);
      if (!rep.liftable) {
        emit(io::to_json(rep, r.presentation()));
        return kCheckFailed;
      }
      emit(io::to_json(enumerate_lifts(r)));
    } else if (*mc_cmd) {
      auto m = load_model(g);
      auto d = io::mcdata_from_json(load(mc_path), m, mc_path);
      auto rep = mc_check(m, d);
      emit(io::to_json(rep, m));
      return rep.holds() ? kOk : kCheckFailed;
    } else if (*ext_cmd) {
      auto m = load_model(g);
      auto d = io::mcdata_from_json(load(mc_path), m, mc_path);
      auto rep = mc_check(m, d);
      if (!rep.holds()) {
        emit(io::to_json(rep, m));
        return kCheckFailed;
      }
      emit(io::to_json(ext_class_rep(m, d), m));
    } else if (*exact_cmd) {
      auto m = load_model(g);
      if (!mc_path.empty() == !form_path.empty()) throw InputError("give exactly one of --mc and --form");
      if (!mc_path.empty()) {
        auto d = io::mcdata_from_json(load(mc_path), m, mc_path);
        if (!mc_check(m, d).holds()) throw InputError("Maurer–Cartan equation fails; no extension class");
        auto e = ext_class_rep(m, d);
        auto v = e.mode == CoefficientMode::rank1 ? is_exact(m, e.form, 2, e.weight) : is_exact(m, e.valued, 2);
        Json out = io::to_json(v, m);
        out["class"] = io::to_json(e, m);
        emit(out);
      } else {
        auto j = load(form_path);
        if (!j.is_object() || !j.contains("degree") || !j.contains("form"))
          throw io::ParseError(form_path, "expected {\"degree\", \"weight\", \"form\"}");
        if (!j["degree"].is_number_integer()) throw io::ParseError(form_path + ".degree", "expected an integer");
        int w = 0;
        if (j.contains("weight")) {
          if (!j["weight"].is_number_integer()) throw io::ParseError(form_path + ".weight", "expected an integer");
          w = j["weight"].get<int>();
        }
        auto e = io::element_from_json(m, j["form"], form_path + ".form");
        emit(io::to_json(is_exact(m, e, j["degree"].get<int>(), w), m));
      }
    } else if (*bridge_cmd) {
      auto j = load(periods_path);
      auto vec = [&](const char* key) {
        if (!j.is_object() || !j.contains(key)) throw io::ParseError(periods_path + "." + key, "missing required field");
        auto v = io::vector_from_json(j[key], f, periods_path + "." + key);
        if (v.size() != static_cast<std::size_t>(genus))
          throw io::ParseError(periods_path + "." + key, "expected " + std::to_string(genus) + " entries");
        return v;
      };
      auto x = vec("x"), y = vec("y"), w = vec("w"), z = vec("z");
      Scalar q = Scalar::zero(f);
      for (int i = 0; i < genus; ++i) q += x[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
      auto rep = lift_obstruction(surface_rep_bridge(genus, x, y, w, z));
      auto model = surface_model(genus, f);
      auto e = ext_class_rep(model, surface_mc_data(model, x, y, w, z));
      auto verdict = is_exact(model, e.form, 2, 0);
      const bool exact = verdict.kind == ExactnessVerdict::Kind::exact;
      const bool agree = rep.liftable == exact;
      Json out{{"quadric", q.str()},
               {"group", Json{{"liftable", rep.liftable}, {"defect", rep.defects.front().str()}}},
               {"de_rham", Json{{"class", io::to_json(e, model)}, {"verdict", to_string(verdict.kind)}}},
               {"agree", agree}};
      if (!q.is_zero()) out["defect_over_quadric"] = (rep.defects.front().coordinates(4)[0] / q).str();
      emit(out);
      return agree ? kOk : kCheckFailed;
    } else if (*classify_cmd) {
      auto p = load_presentation(g);
      auto rho = io::rho0_from_json(load(rho_path), p, f, rho_path);
      ClassifyReport r;
      try {
        r = classify_b4(p, rho);
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(rho_path, e.what());
      }
      if (g.table)
        print_classify_table(r);
      else
        emit(io::to_json(r));
    } else if (*normalize_cmd) {
      if (f == Field::rational) {
        auto eq = orbit_equation(parse_list(u_text, f, "--u"), parse_list(v_text, f, "--v"));
        emit(Json{{"equation", "quadratic*s^2 + linear*s = 1"}, {"quadratic", eq.quadratic.str()}, {"linear", eq.linear.str()}});
      } else {
        auto to_d = [&](const std::string& t, const char* what) {
          std::vector<double> out;
          for (const auto& s : parse_list(t, f, what)) out.push_back(s.to_double());
          return out;
        };
        try {
          emit(io::to_json(normalize_orbit(to_d(u_text, "--u"), to_d(v_text, "--v"))));
        } catch (const ZeroOrbit& e) {
          emit(Json{{"zero_orbit", true}, {"note", e.what()}});
          return kCheckFailed;
        }
      }
    } else if (*selftest_cmd) {
      auto results = run_selftest(g.seed, g.jobs);
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
      }
      if (!g.report_xml.empty()) {
        std::ofstream out(g.report_xml);
        if (!out) throw InputError("cannot write " + g.report_xml);
        out << junit_xml(results);
      }
      return ok ? kOk : kCheckFailed;
    }
    return kOk;
  } catch (const io::ParseError& e) {
    std::cerr << "jetfol: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "jetfol: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "jetfol: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "jetfol: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const FieldMismatch& e) {
    std::cerr << "jetfol: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "jetfol: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
