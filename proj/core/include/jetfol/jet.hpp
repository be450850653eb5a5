#pragma once

#include <map>
#include <string>

#include "jetfol/matrix.hpp"
#include "jetfol/multi_index.hpp"
#include "jetfol/scalar.hpp"

namespace jetfol {

/// Sparse coefficient table keyed by (component, monomial). Zero is never stored.
using Coeffs = std::map<Term, Scalar>;

/// Truncated polynomial map (x_1..x_l) -> l components, terms of weight 1..k.
///
/// Components are 0-based internally; the JSON encoding lists them in order.
class JetMap {
 public:
  JetMap(int l, int k, Field f, Coeffs coeffs = {});

  static JetMap identity(int l, int k, Field f);
  /// The linear jet x -> A x.
  static JetMap linear(const Matrix& a, int k);

  int l() const { return l_; }
  int k() const { return k_; }
  Field field() const { return field_; }
  const Coeffs& coeffs() const { return coeffs_; }

  Scalar coeff(int component, const MultiIndex& j) const;
  /// l x l matrix of weight-1 coefficients: entry (i, j) is the x_j coefficient of component i.
  Matrix linear_part() const;
  bool is_identity() const;
  /// Highest weight with a nonzero coefficient (0 for the zero map).
  int top_degree() const;

  std::string str() const;

  friend bool operator==(const JetMap&, const JetMap&) = default;

 private:
  int l_, k_;
  Field field_;
  Coeffs coeffs_;
};

/// Element of G_{k,l}: a JetMap whose linear part is invertible.
class JetDiffeo : public JetMap {
 public:
  explicit JetDiffeo(JetMap m);
  static JetDiffeo identity(int l, int k, Field f) { return JetDiffeo(JetMap::identity(l, k, f)); }
  static JetDiffeo linear(const Matrix& a, int k) { return JetDiffeo(JetMap::linear(a, k)); }
};

/// Truncation of f∘g (g applied first) past weight k.
JetMap compose(const JetMap& f, const JetMap& g);
JetDiffeo compose(const JetDiffeo& f, const JetDiffeo& g);

JetDiffeo invert(const JetDiffeo& f);

/// Drops every term of weight above k2.
JetMap truncate(const JetMap& f, int k2);
JetDiffeo truncate(const JetDiffeo& f, int k2);

/// Reinterprets f at a higher order k2 >= f.k (no new terms).
JetMap extend_order(const JetMap& f, int k2);
JetDiffeo extend_order(const JetDiffeo& f, int k2);

/// Polynomial vector field sum_{i,J} c_{i,J} x^J d/dx_i with min_degree <= |J| <= max_degree.
class PolyVector {
 public:
  PolyVector(int l, int min_degree, int max_degree, Field f, Coeffs coeffs = {});

  static PolyVector zero(int l, int min_degree, int max_degree, Field f) {
    return PolyVector(l, min_degree, max_degree, f);
  }
  /// Single term c x^J d/dx_i, degree bounds set to |J|.
  static PolyVector monomial(int l, int component, const MultiIndex& j, const Scalar& c);

  int l() const { return l_; }
  int min_degree() const { return min_; }
  int max_degree() const { return max_; }
  Field field() const { return field_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(int component, const MultiIndex& j) const;
  PolyVector homogeneous_part(int degree) const;
  /// Same terms restricted to [min_degree, max_degree]; terms outside are dropped.
  PolyVector with_degrees(int min_degree, int max_degree) const;

  /// Coordinates in module_basis(l, degree) order; requires a homogeneous layer.
  Vector coordinates(int degree) const;
  static PolyVector from_coordinates(int l, int degree, const Vector& v, Field f);

  PolyVector operator-() const;
  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  PolyVector& operator*=(const Scalar& s);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(const Scalar& s, PolyVector a) { return a *= s; }

  std::string str() const;

  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  void absorb(const PolyVector& o, bool subtract);

  int l_, min_, max_;
  Field field_;
  Coeffs coeffs_;
};

/// The jet x + v(x) at order k (terms of v above k are dropped).
JetMap identity_plus(const PolyVector& v, int k);
/// f - id, keeping weights in [min_degree, max_degree].
PolyVector minus_identity(const JetMap& f, int min_degree, int max_degree);
/// v read as a map x -> v(x) with no identity part, at order v.max_degree().
JetMap as_map(const PolyVector& v);

}  // namespace jetfol
