#pragma once

#include <optional>
#include <vector>

#include "jetfol/jet.hpp"

namespace jetfol {

/// Time-one flow of X (all terms of weight 2..k) as an element of K_{k,l}.
JetDiffeo exp_jet(const PolyVector& x, int k);
inline JetDiffeo exp_jet(const PolyVector& x) { return exp_jet(x, x.max_degree()); }

/// Inverse of exp_jet on jets with identity linear part. Degrees [2, max(k,2)].
PolyVector log_jet(const JetMap& u);

/// [X,Y]_i = X(Y_i) - Y(X_i). Full degree unless max_degree is given.
PolyVector bracket(const PolyVector& x, const PolyVector& y, std::optional<int> max_degree = std::nullopt);

/// g = exp_jet(nilpotent) ∘ linear.
struct LevyCoords {
  Matrix linear;
  PolyVector nilpotent;
  friend bool operator==(const LevyCoords&, const LevyCoords&) = default;
};

LevyCoords levy_decompose(const JetDiffeo& g);
JetDiffeo levy_compose(const LevyCoords& c, int k);

/// Splitting G_{k,l} -> G_{k+1,l}: zero-padding in exp-coordinates.
JetDiffeo section_sk(const JetDiffeo& g);
/// Alternative splitting: zero-padding of polynomial coefficients.
JetDiffeo section_polynomial(const JetDiffeo& g);

/// s(g1) ∘ s(g2) ∘ s(g1 g2)^{-1} - id, a homogeneous layer of weight k+1.
PolyVector alpha_cocycle(const JetDiffeo& g1, const JetDiffeo& g2);

/// x -> A v(A^{-1} x).
PolyVector gl_action(const Matrix& a, const PolyVector& v);

/// Scales the weight-(i+1) exp-coordinate by t^i; t = 0 keeps only the linear part.
JetDiffeo dilation_homotopy(const Scalar& t, const JetDiffeo& g);
/// The linear jet x -> s x.
JetDiffeo dilation_jet(const Scalar& s, int l, int k);

/// Codimension-1 chart (c_1, ..., c_{k-1}, c_0) of exp(sum c_i t^{i+1} d/dt) ∘ (c_0 t).
std::vector<Scalar> chart_l1(const JetDiffeo& g);
JetDiffeo from_chart_l1(const std::vector<Scalar>& c);

struct G31Coords {
  Scalar a1, a2, a0;
  friend bool operator==(const G31Coords&, const G31Coords&) = default;
};

G31Coords chart_g31(const JetDiffeo& g);
JetDiffeo from_chart_g31(const G31Coords& c, Field f);
/// (a1 + a0^{-1} b1, a2 + a0^{-2} b2, a0 b0).
G31Coords g31_product(const G31Coords& a, const G31Coords& b);
G31Coords g31_inverse(const G31Coords& a);

struct G2lCoords {
  PolyVector k;  // weight-2 layer
  Matrix a;
  friend bool operator==(const G2lCoords&, const G2lCoords&) = default;
};

G2lCoords chart_g2l(const JetDiffeo& g);
JetDiffeo from_chart_g2l(const G2lCoords& c);
/// (k1 + A1(k2), A1 A2).
G2lCoords g2l_product(const G2lCoords& a, const G2lCoords& b);

/// Weight-4 coefficient of alpha_cocycle on G_{3,1}: ½(a0^{-1} b1 a2 - a1 a0^{-2} b2).
Scalar e41_closed_form(const G31Coords& a, const G31Coords& b);
/// The literal expression ½(a1 a0^{-1} b2 - a0^{-1} b1 a2); equals -e41_closed_form when a0 = 1.
Scalar e41_printed_form(const G31Coords& a, const G31Coords& b);

}  // namespace jetfol
