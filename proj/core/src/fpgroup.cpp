#include "jetfol/fpgroup.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

namespace jetfol {

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->generator, -it->sign});
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (const auto& x : w.letters) {
    if (!r.letters.empty() && r.letters.back().generator == x.generator && r.letters.back().sign == -x.sign)
      r.letters.pop_back();
    else
      r.letters.push_back(x);
  }
  return r;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  if (generators_.empty()) throw std::invalid_argument("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty() || g.find('^') != std::string::npos) throw std::invalid_argument("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator name '" + g + "'");
  }
  for (const auto& r : relators_)
    for (const auto& x : r.letters) {
      if (x.generator < 0 || x.generator >= rank()) throw std::invalid_argument("relator references an undeclared generator");
      if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

int Presentation::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return static_cast<int>(it - generators_.begin());
}

Word Presentation::parse_word(const std::vector<std::string>& letters) const {
  Word w;
  for (const auto& s : letters) {
    if (s.size() > 3 && s.ends_with("^-1"))
      w.letters.push_back({index_of(std::string_view(s).substr(0, s.size() - 3)), -1});
    else
      w.letters.push_back({index_of(s), 1});
  }
  return w;
}

std::vector<std::string> Presentation::format_word(const Word& w) const {
  std::vector<std::string> out;
  for (const auto& x : w.letters)
    out.push_back(generators_.at(static_cast<std::size_t>(x.generator)) + (x.sign < 0 ? "^-1" : ""));
  return out;
}

Presentation surface_presentation(int genus) {
  if (genus < 1) throw std::invalid_argument("surface genus must be at least 1");
  std::vector<std::string> gens;
  Word rel;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    gens.push_back("a" + std::to_string(i + 1));
    gens.push_back("b" + std::to_string(i + 1));
    rel.letters.insert(rel.letters.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return Presentation(std::move(gens), {rel});
}

Presentation builtin_presentation(std::string_view name) {
  if (name == "circle") return Presentation({"t"}, {});
  if (name == "torus") return Presentation({"x", "y"}, {Word{{{0, 1}, {1, 1}, {0, -1}, {1, -1}}}});
  if (name == "heisenberg")
    return Presentation({"x", "y", "z"}, {Word{{{0, 1}, {1, 1}, {0, -1}, {1, -1}, {2, -1}}},
                                          Word{{{0, 1}, {2, 1}, {0, -1}, {2, -1}}},
                                          Word{{{1, 1}, {2, 1}, {1, -1}, {2, -1}}}});
  if (name.starts_with("surface:")) {
    auto digits = name.substr(8);
    int g = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), g);
    if (ec != std::errc() || p != digits.data() + digits.size())
      throw std::invalid_argument("malformed surface genus in '" + std::string(name) + "'");
    return surface_presentation(g);
  }
  throw std::invalid_argument("unknown builtin presentation '" + std::string(name) +
                              "' (expected circle|torus|surface:g|heisenberg)");
}

JetDiffeo evaluate_word(const Word& w, const std::vector<JetDiffeo>& images) {
  if (images.empty()) throw std::invalid_argument("evaluate_word: no generator images");
  const auto& ref = images.front();
  JetDiffeo acc = JetDiffeo::identity(ref.l(), ref.k(), ref.field());
  std::vector<std::optional<JetDiffeo>> inverses(images.size());
  for (const auto& x : w.letters) {
    if (x.generator < 0 || static_cast<std::size_t>(x.generator) >= images.size())
      throw std::invalid_argument("evaluate_word: unassigned generator");
    const auto& g = images[static_cast<std::size_t>(x.generator)];
    if (x.sign > 0) {
      acc = compose(acc, g);
    } else {
      auto& inv = inverses[static_cast<std::size_t>(x.generator)];
      if (!inv) inv = invert(g);
      acc = compose(acc, *inv);
    }
  }
  return acc;
}

Matrix evaluate_word(const Word& w, const std::vector<Matrix>& images) {
  if (images.empty()) throw std::invalid_argument("evaluate_word: no generator images");
  Matrix acc = Matrix::identity(images.front().rows(), images.front().field());
  for (const auto& x : w.letters) {
    const auto& g = images.at(static_cast<std::size_t>(x.generator));
    if (x.sign > 0) {
      acc = acc * g;
    } else {
      auto inv = inverse(g);
      if (!inv) throw std::domain_error("evaluate_word: singular matrix");
      acc = acc * *inv;
    }
  }
  return acc;
}

ModuleAction::ModuleAction(std::size_t dim, Field f, std::vector<Matrix> action)
    : dim_(dim), field_(f), action_(std::move(action)) {
  for (const auto& m : action_) {
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("module action matrix has wrong shape");
    if (m.field() != f) throw FieldMismatch();
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("module action matrix is singular");
    inverse_.push_back(std::move(*inv));
  }
}

ModuleAction ModuleAction::trivial(int generators, std::size_t dim, Field f) {
  return ModuleAction(dim, f, std::vector<Matrix>(static_cast<std::size_t>(generators), Matrix::identity(dim, f)));
}

ModuleAction ModuleAction::scalar(const std::vector<Scalar>& values) {
  if (values.empty()) throw std::invalid_argument("scalar action needs at least one generator");
  std::vector<Matrix> ms;
  for (const auto& v : values) {
    Matrix m(1, 1, v.field());
    m(0, 0) = v;
    ms.push_back(m);
  }
  return ModuleAction(1, values.front().field(), std::move(ms));
}

Vector crossed_extend(const std::vector<Vector>& c, const Word& w, const ModuleAction& act) {
  if (c.size() != static_cast<std::size_t>(act.generators())) throw std::invalid_argument("cochain has wrong number of generators");
  for (const auto& v : c)
    if (v.size() != act.dim()) throw std::invalid_argument("cochain value has wrong dimension");
  Vector acc = zero_vector(act.dim(), act.field());
  Matrix prefix = Matrix::identity(act.dim(), act.field());
  for (const auto& x : w.letters) {
    const auto g = x.generator;
    if (x.sign > 0) {
      acc = acc + prefix * c[static_cast<std::size_t>(g)];
      prefix = prefix * act.rho(g);
    } else {
      prefix = prefix * act.rho_inverse(g);
      acc = acc - prefix * c[static_cast<std::size_t>(g)];
    }
  }
  return acc;
}

Matrix d1_matrix(const Presentation& p, const ModuleAction& act) {
  const std::size_t n = act.dim();
  const auto& rels = p.relators();
  Matrix d(rels.size() * n, static_cast<std::size_t>(p.rank()) * n, act.field());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    Matrix prefix = Matrix::identity(n, act.field());
    for (const auto& x : rels[r].letters) {
      Matrix block = prefix;
      if (x.sign > 0) {
        prefix = prefix * act.rho(x.generator);
      } else {
        prefix = prefix * act.rho_inverse(x.generator);
        block = Matrix(n, n, act.field()) - prefix;
      }
      const std::size_t col = static_cast<std::size_t>(x.generator) * n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(r * n + i, col + j) += block(i, j);
    }
  }
  return d;
}

Matrix d0_matrix(const Presentation& p, const ModuleAction& act) {
  const std::size_t n = act.dim();
  Matrix d(static_cast<std::size_t>(p.rank()) * n, n, act.field());
  for (int g = 0; g < p.rank(); ++g) {
    Matrix block = act.rho(g) - Matrix::identity(n, act.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(static_cast<std::size_t>(g) * n + i, j) = block(i, j);
  }
  return d;
}

Vector flatten(const std::vector<Vector>& c) {
  Vector out;
  for (const auto& v : c) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Vector> unflatten(const Vector& v, int generators, std::size_t dim) {
  if (v.size() != static_cast<std::size_t>(generators) * dim) throw std::invalid_argument("cochain vector has wrong length");
  std::vector<Vector> out;
  for (int g = 0; g < generators; ++g)
    out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g) * dim),
                     v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g + 1) * dim));
  return out;
}

}  // namespace jetfol
