#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetfol/jet.hpp"
#include "jetfol/matrix.hpp"
#include "jetfol/obstruction.hpp"

namespace jetfol {

struct BasisElement {
  std::string name;
  int degree = 0;
  int weight = 0;  // power of the line bundle
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite weighted graded-commutative dg-algebra. Elements are coefficient
/// vectors over the basis. The twisted differential on weight w is
/// d_w(x) = dx + w A∧x for the connection form A.
class CdgaModel {
 public:
  /// products[i][j] = e_i e_j, differential[i] = d e_i. Validates all axioms.
  CdgaModel(std::string name, std::vector<BasisElement> basis, std::vector<std::vector<Vector>> products,
            std::vector<Vector> differential, Vector connection, Field f, bool decides_cohomology = true);

  const std::string& name() const { return name_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  Field field() const { return field_; }
  const Vector& connection() const { return connection_; }
  /// False when the finite model is not known to compute the relevant cohomology.
  bool decides_cohomology() const { return decides_; }
  bool untwisted() const;

  int index_of(std::string_view name) const;
  Vector element(std::string_view name) const;
  Vector zero() const { return zero_vector(dim(), field_); }

  Vector mul(const Vector& x, const Vector& y) const;
  Vector d(const Vector& x) const;
  Vector d_twisted(const Vector& x, int weight) const;
  const Vector& product(int i, int j) const { return products_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Vector& differential(int i) const { return differential_[static_cast<std::size_t>(i)]; }

  /// Basis indices of the (degree, weight) block.
  std::vector<int> block(int degree, int weight) const;
  /// Nonzero (degree, weight) pairs of x, throws unless x is homogeneous.
  std::pair<int, int> bidegree(const Vector& x) const;

  std::string format(const Vector& x) const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<Vector>> products_;
  std::vector<Vector> differential_;
  Vector connection_;
  Field field_;
  bool decides_;
};

/// Exterior algebra on degree-1 generators; d on generators extended by Leibniz.
CdgaModel exterior_model(std::string name, const std::vector<std::string>& generators, const std::vector<int>& weights,
                         const std::vector<std::map<std::vector<std::string>, Scalar>>& d_generators,
                         const std::map<std::string, Scalar>& connection, Field f, bool decides_cohomology = true);

CdgaModel heisenberg_model(Field f = Field::rational);
CdgaModel surface_model(int genus, Field f = Field::rational);
CdgaModel mapping_torus_model(const Scalar& lambda);
/// Λ(alpha, beta, gamma) with d = 0: base for the trivial rank-2 bundle example.
CdgaModel trivial_rank2_base(Field f = Field::rational);

/// "heisenberg", "surface" (genus), "mapping_torus" (lambda), "trivial_rank2".
CdgaModel build_model(std::string_view name, const std::map<std::string, std::string>& params, Field f);

enum class CoefficientMode { rank1, trivial };

/// Form with values in a homogeneous PolyVector layer: one PolyVector per model basis element.
struct ValuedForm {
  int l = 1, poly_degree = 1;
  std::vector<PolyVector> parts;
  bool is_zero() const;
  friend bool operator==(const ValuedForm&, const ValuedForm&) = default;
};

ValuedForm zero_valued(const CdgaModel& m, int l, int poly_degree);

struct McData {
  int k = 2;
  CoefficientMode mode = CoefficientMode::rank1;
  int l = 1;                      // trivial mode only
  std::vector<Vector> eta;        // rank-1 mode: eta_1..eta_{k-1}
  std::vector<ValuedForm> valued; // trivial mode: eta_i with PolyVector degree i+1
};

struct McReport {
  CoefficientMode mode = CoefficientMode::rank1;
  std::vector<Vector> residuals;
  std::vector<ValuedForm> valued_residuals;
  bool holds() const;
};

McReport mc_check(const CdgaModel& m, const McData& data);

struct ExtClass {
  CoefficientMode mode = CoefficientMode::rank1;
  int weight = 0;  // rank-1 mode
  Vector form;
  ValuedForm valued;
};

/// ½ Σ_{i+j=k} [η_i, η_j]; throws if the Maurer–Cartan equation fails.
ExtClass ext_class_rep(const CdgaModel& m, const McData& data);

/// [x, y] = (j - i) x∧y for weights -i, -j in rank-1 mode.
Vector rank1_bracket(const CdgaModel& m, const Vector& x, int i, const Vector& y, int j);
/// Wedge on forms combined with the PolyVector bracket on values.
ValuedForm valued_bracket(const CdgaModel& m, const ValuedForm& x, const ValuedForm& y);

struct ExactnessVerdict {
  enum class Kind { exact, not_exact, undecided } kind = Kind::undecided;
  std::optional<Vector> primitive;
  std::optional<ValuedForm> valued_primitive;
  std::optional<InfeasibilityCertificate> certificate;
};

std::string to_string(ExactnessVerdict::Kind k);

/// Decides e ∈ image of d_weight inside the (degree, weight) block. Throws if e is not closed.
ExactnessVerdict is_exact(const CdgaModel& m, const Vector& e, int degree, int weight);
/// Componentwise over the PolyVector coordinates (trivial connection).
ExactnessVerdict is_exact(const CdgaModel& m, const ValuedForm& e, int degree);

/// Genus-g presentation into G_{3,1}: a_i -> (x_i, w_i, 1), b_i -> (y_i, z_i, 1).
Representation surface_rep_bridge(int genus, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                  const std::vector<Scalar>& w, const std::vector<Scalar>& z);

/// η_1 = Σ x_i α_i + y_i β_i, η_2 = Σ w_i α_i + z_i β_i on surface_model(g), k = 3.
McData surface_mc_data(const CdgaModel& surface, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                       const std::vector<Scalar>& w, const std::vector<Scalar>& z);

}  // namespace jetfol
