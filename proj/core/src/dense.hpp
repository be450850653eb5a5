#pragma once

// Dense truncated polynomials over a common denominator. Rationals run on
// mpz numerators (no gcd work inside inner loops); floats use double with a
// denominator pinned to 1.

#include <gmpxx.h>

#include <vector>

#include "jetfol/jet.hpp"

namespace jetfol::detail {

/// All monomials of weight 0..k in l variables, ordered by weight then lexicographic.
class Layout {
 public:
  Layout(int l, int k);

  int l() const { return l_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const MultiIndex& mono(int a) const { return monos_[static_cast<std::size_t>(a)]; }
  int degree(int a) const { return deg_[static_cast<std::size_t>(a)]; }
  int first_of_degree(int d) const { return first_[static_cast<std::size_t>(d)]; }
  /// -1 when the weight exceeds k.
  int index(const MultiIndex& m) const;
  /// Pairs (b, a*b) for every b with weight(a) + weight(b) <= k.
  const std::vector<std::pair<int, int>>& products(int a) const { return mul_[static_cast<std::size_t>(a)]; }
  /// Index of a - e_j, or -1 if the j-th exponent of a is zero.
  int lower(int a, int j) const { return lower_[static_cast<std::size_t>(a * l_ + j)]; }

 private:
  int l_, k_;
  std::vector<MultiIndex> monos_;
  std::vector<int> deg_, first_, key_, mul_keys_, lower_;
  std::vector<std::vector<std::pair<int, int>>> mul_;
  int key(std::span<const int> e) const;
};

inline void addmul(mpz_class& r, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void addmul(double& r, double a, double b) { r += a * b; }
inline bool is_nil(const mpz_class& a) { return sgn(a) == 0; }
inline bool is_nil(double a) { return a == 0.0; }

template <class T>
struct Poly {
  std::vector<T> num;
  T den;
};

/// l components sharing one denominator.
template <class T>
struct DenseMap {
  std::vector<std::vector<T>> comp;
  T den;
};

template <class T>
DenseMap<T> load(const Layout& lay, const Coeffs& c);
template <class T>
Coeffs store(const Layout& lay, const DenseMap<T>& m, int min_degree, int max_degree);

template <class T>
DenseMap<T> compose(const Layout& lay, const DenseMap<T>& f, const DenseMap<T>& g);

/// Time-one flow of the vector field x (degrees >= 2) as a map, through weight k.
template <class T>
DenseMap<T> flow(const Layout& lay, const DenseMap<T>& x);

/// [x, y]_i = x(y_i) - y(x_i), truncated at the layout order.
template <class T>
DenseMap<T> bracket(const Layout& lay, const DenseMap<T>& x, const DenseMap<T>& y);

}  // namespace jetfol::detail
