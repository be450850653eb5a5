#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jetfol/jet.hpp"
#include "jetfol/matrix.hpp"

namespace jetfol {

struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the generators; not reduced unless free_reduce is called.
struct Word {
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word free_reduce(const Word& w);

class Presentation {
 public:
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  int index_of(std::string_view name) const;

  /// Parses letters such as "a1" and "b1^-1".
  Word parse_word(const std::vector<std::string>& letters) const;
  std::vector<std::string> format_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// "circle", "torus", "surface:g" (or "surface" with genus), "heisenberg".
Presentation builtin_presentation(std::string_view name);
Presentation surface_presentation(int genus);

/// Left-to-right product with compose; inverse letters use invert.
JetDiffeo evaluate_word(const Word& w, const std::vector<JetDiffeo>& images);
Matrix evaluate_word(const Word& w, const std::vector<Matrix>& images);

/// Generators acting on a coefficient module by invertible matrices.
class ModuleAction {
 public:
  ModuleAction(std::size_t dim, Field f, std::vector<Matrix> action);
  static ModuleAction trivial(int generators, std::size_t dim, Field f);
  /// One-dimensional module, generator i acting by values[i].
  static ModuleAction scalar(const std::vector<Scalar>& values);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const Matrix& rho(int g) const { return action_.at(static_cast<std::size_t>(g)); }
  const Matrix& rho_inverse(int g) const { return inverse_.at(static_cast<std::size_t>(g)); }
  const std::vector<Matrix>& matrices() const { return action_; }
  int generators() const { return static_cast<int>(action_.size()); }

 private:
  std::size_t dim_;
  Field field_;
  std::vector<Matrix> action_, inverse_;
};

/// c(w1 w2) = c(w1) + rho(w1) c(w2), c(g^{-1}) = -rho(g)^{-1} c(g).
Vector crossed_extend(const std::vector<Vector>& c, const Word& w, const ModuleAction& act);

/// Rows (relator, coordinate), columns (generator, coordinate).
Matrix d1_matrix(const Presentation& p, const ModuleAction& act);
/// Blocks rho(g) - I stacked over generators.
Matrix d0_matrix(const Presentation& p, const ModuleAction& act);

/// Flattens a per-generator cochain into one vector ordered like d1 columns, and back.
Vector flatten(const std::vector<Vector>& c);
std::vector<Vector> unflatten(const Vector& v, int generators, std::size_t dim);

}  // namespace jetfol
