#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jetfol/fpgroup.hpp"
#include "jetfol/jetgroup.hpp"

namespace jetfol {

struct ValidationReport {
  bool valid = true;
  std::vector<PolyVector> deviations;  // relator value minus identity, per relator
};

/// Checks dimensions and evaluates every relator.
ValidationReport validate_rep(const Presentation& p, const std::vector<JetDiffeo>& images);

/// Homomorphism from a presented group into G_{k,l}; relators are checked on construction.
class Representation {
 public:
  Representation(Presentation p, std::vector<JetDiffeo> images);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<JetDiffeo>& images() const { return images_; }
  const JetDiffeo& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
  int l() const { return images_.front().l(); }
  int k() const { return images_.front().k(); }
  Field field() const { return images_.front().field(); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Presentation presentation_;
  std::vector<JetDiffeo> images_;
};

Representation trivial_rep(const Presentation& p, int l, int k, Field f);

/// Generator-wise g phi(.) g^{-1}.
Representation conjugate_rep(const JetDiffeo& g, const Representation& r);

/// Matrix of v -> gl_action(a, v) on module_basis(l, degree).
Matrix layer_action(const Matrix& a, int degree);

/// Linear parts of the images acting on the weight-`degree` layer.
ModuleAction module_action_for(const Representation& r, int degree);

struct H1Result {
  std::size_t z1 = 0, b1 = 0, h1 = 0;
  std::vector<Vector> z1_basis, b1_basis;
};

H1Result twisted_h1(const Presentation& p, const ModuleAction& act);

enum class Section { exponential, polynomial };

JetDiffeo apply_section(const JetDiffeo& g, Section s);

struct LiftReport {
  bool liftable = false;
  std::vector<PolyVector> defects;  // weight-(k+1) layer, per relator
  Vector defect_vector;             // stacked relator coordinates
  Matrix d1;
  std::optional<AffineSolution> solution;  // of d1 c = -defect
  std::optional<InfeasibilityCertificate> certificate;
  std::optional<Representation> witness;
};

/// Relator defects of section lifts, one coordinate vector per relator.
std::vector<PolyVector> relator_defects(const Presentation& p, const std::vector<JetDiffeo>& lifts);

LiftReport lift_obstruction(const Representation& r, Section s = Section::exponential);

/// Lifts adjusted by a cochain: g -> (id + c_g) ∘ lift_g.
std::vector<JetDiffeo> adjust_lifts(const std::vector<JetDiffeo>& lifts, const Vector& cochain);

struct ExtensionSpace {
  Representation base_lift;
  ModuleAction action;
  std::vector<Vector> z1_basis, b1_basis;
  std::size_t h1_dim = 0;
};

ExtensionSpace enumerate_lifts(const Representation& r);

/// Group 2-cochain with values in a module; throws std::out_of_range where undefined.
using Cochain2 = std::function<Vector(const JetDiffeo&, const JetDiffeo&)>;
using GroupAction = std::function<Matrix(const JetDiffeo&)>;

/// c1·α(c2,c3) − α(c1c2,c3) + α(c1,c2c3) − α(c1,c2).
Vector cochain_delta_eval(const Cochain2& alpha, const JetDiffeo& c1, const JetDiffeo& c2, const JetDiffeo& c3,
                          const GroupAction& act);

/// Action of G_{k,l} on the weight-(k+1) layer through its linear part.
GroupAction top_layer_action(int k);

struct Transport {
  enum class Kind { project, include, dilate } kind;
  int order = 1;  // target order for project / include
  Scalar t;       // dilate parameter
};

/// project: truncate to `order`; include: linear parts as order-`order` jets; dilate: h_t generator-wise.
Representation transport_rep(const Representation& r, const Transport& mode);

}  // namespace jetfol
