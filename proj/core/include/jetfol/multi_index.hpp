#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace jetfol {

/// Exponent tuple J = (j_1, ..., j_l) of the monomial x^J.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exps);

  static MultiIndex zero(int l);
  static MultiIndex unit(int l, int i);

  int size() const { return static_cast<int>(exps_.size()); }
  int weight() const { return weight_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exps() const { return exps_; }

  MultiIndex operator+(const MultiIndex& o) const;

  /// Lexicographic on the exponent tuple.
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }

  /// "x1^2*x3", or "1" for the zero index. Single-variable indices print as "t^k".
  std::string str() const;

 private:
  std::vector<int> exps_;
  int weight_ = 0;
};

/// All multi-indices in l variables of the given weight, ascending lexicographic.
std::vector<MultiIndex> monomials_of_degree(int l, int degree);

/// Coordinate (component i, monomial J) of a polynomial vector field or map.
struct Term {
  int component = 0;
  MultiIndex index = MultiIndex::zero(1);

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

/// The monomial basis (i, J), |J| = degree, ordered by (component, exponents).
std::vector<Term> module_basis(int l, int degree);

}  // namespace jetfol
