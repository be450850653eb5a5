#include "jetfol/obstruction.hpp"

#include <stdexcept>

namespace jetfol {

ValidationReport validate_rep(const Presentation& p, const std::vector<JetDiffeo>& images) {
  if (images.size() != static_cast<std::size_t>(p.rank()))
    throw std::invalid_argument("representation needs one image per generator");
  for (const auto& g : images) {
    if (g.l() != images.front().l() || g.k() != images.front().k())
      throw std::invalid_argument("representation images have mixed (l,k)");
    if (g.field() != images.front().field()) throw FieldMismatch();
  }
  ValidationReport rep;
  const int k = images.front().k();
  for (const auto& rel : p.relators()) {
    auto dev = minus_identity(evaluate_word(rel, images), 1, k);
    rep.valid = rep.valid && dev.is_zero();
    rep.deviations.push_back(std::move(dev));
  }
  return rep;
}

Representation::Representation(Presentation p, std::vector<JetDiffeo> images)
    : presentation_(std::move(p)), images_(std::move(images)) {
  auto rep = validate_rep(presentation_, images_);
  for (std::size_t i = 0; i < rep.deviations.size(); ++i)
    if (!rep.deviations[i].is_zero())
      throw std::domain_error("relator " + std::to_string(i + 1) + " does not evaluate to the identity (deviation " +
                              rep.deviations[i].str() + ")");
}

Representation trivial_rep(const Presentation& p, int l, int k, Field f) {
  return Representation(p, std::vector<JetDiffeo>(static_cast<std::size_t>(p.rank()), JetDiffeo::identity(l, k, f)));
}

Representation conjugate_rep(const JetDiffeo& g, const Representation& r) {
  if (g.l() != r.l() || g.k() != r.k()) throw std::invalid_argument("conjugate_rep: element does not match representation");
  JetDiffeo ginv = invert(g);
  std::vector<JetDiffeo> out;
  for (const auto& x : r.images()) out.push_back(compose(compose(g, x), ginv));
  return Representation(r.presentation(), std::move(out));
}

Matrix layer_action(const Matrix& a, int degree) {
  const int l = static_cast<int>(a.rows());
  auto basis = module_basis(l, degree);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto v = PolyVector::from_coordinates(l, degree, unit_vector(basis.size(), j, a.field()), a.field());
    cols.push_back(gl_action(a, v).coordinates(degree));
  }
  return Matrix::from_columns(cols, a.field());
}

ModuleAction module_action_for(const Representation& r, int degree) {
  std::vector<Matrix> ms;
  for (const auto& g : r.images()) ms.push_back(layer_action(g.linear_part(), degree));
  return ModuleAction(module_basis(r.l(), degree).size(), r.field(), std::move(ms));
}

H1Result twisted_h1(const Presentation& p, const ModuleAction& act) {
  if (act.generators() != p.rank()) throw std::invalid_argument("module action does not match presentation");
  H1Result h;
  h.z1_basis = kernel_basis(d1_matrix(p, act));
  h.b1_basis = image_basis(d0_matrix(p, act));
  h.z1 = h.z1_basis.size();
  h.b1 = h.b1_basis.size();
  h.h1 = h.z1 - h.b1;
  return h;
}

JetDiffeo apply_section(const JetDiffeo& g, Section s) {
  return s == Section::exponential ? section_sk(g) : section_polynomial(g);
}

std::vector<PolyVector> relator_defects(const Presentation& p, const std::vector<JetDiffeo>& lifts) {
  std::vector<PolyVector> out;
  const int k = lifts.front().k();
  for (const auto& rel : p.relators()) {
    auto dev = minus_identity(evaluate_word(rel, lifts), 1, k);
    for (const auto& [t, s] : dev.coeffs())
      if (t.index.weight() != k) throw std::logic_error("relator defect below the top layer");
    out.push_back(dev.with_degrees(k, k));
  }
  return out;
}

std::vector<JetDiffeo> adjust_lifts(const std::vector<JetDiffeo>& lifts, const Vector& cochain) {
  const int l = lifts.front().l(), k = lifts.front().k();
  const Field f = lifts.front().field();
  auto parts = unflatten(cochain, static_cast<int>(lifts.size()), module_basis(l, k).size());
  std::vector<JetDiffeo> out;
  for (std::size_t g = 0; g < lifts.size(); ++g)
    out.push_back(compose(JetDiffeo(identity_plus(PolyVector::from_coordinates(l, k, parts[g], f), k)), lifts[g]));
  return out;
}

LiftReport lift_obstruction(const Representation& r, Section s) {
  const auto& p = r.presentation();
  std::vector<JetDiffeo> lifts;
  for (const auto& g : r.images()) lifts.push_back(apply_section(g, s));

  LiftReport rep;
  rep.defects = relator_defects(p, lifts);
  for (const auto& d : rep.defects) {
    auto c = d.coordinates(r.k() + 1);
    rep.defect_vector.insert(rep.defect_vector.end(), c.begin(), c.end());
  }
  rep.d1 = d1_matrix(p, module_action_for(r, r.k() + 1));
  Vector rhs = rep.defect_vector;
  for (auto& x : rhs) x = -x;
  auto res = solve_or_certify(rep.d1, rhs);
  if (auto* cert = std::get_if<InfeasibilityCertificate>(&res)) {
    rep.certificate = std::move(*cert);
    return rep;
  }
  rep.liftable = true;
  rep.solution = std::get<AffineSolution>(std::move(res));
  rep.witness = Representation(p, adjust_lifts(lifts, rep.solution->particular));
  for (int g = 0; g < p.rank(); ++g)
    if (truncate(rep.witness->image(g), r.k()) != r.image(g)) throw std::logic_error("lift witness does not truncate to input");
  return rep;
}

ExtensionSpace enumerate_lifts(const Representation& r) {
  auto rep = lift_obstruction(r);
  if (!rep.liftable) throw std::invalid_argument("enumerate_lifts: representation is not liftable");
  auto act = module_action_for(r, r.k() + 1);
  auto h = twisted_h1(r.presentation(), act);
  return ExtensionSpace{std::move(*rep.witness), std::move(act), std::move(h.z1_basis), std::move(h.b1_basis), h.h1};
}

Vector cochain_delta_eval(const Cochain2& alpha, const JetDiffeo& c1, const JetDiffeo& c2, const JetDiffeo& c3,
                          const GroupAction& act) {
  Vector out = act(c1) * alpha(c2, c3);
  out = out - alpha(compose(c1, c2), c3);
  out = out + alpha(c1, compose(c2, c3));
  return out - alpha(c1, c2);
}

GroupAction top_layer_action(int k) {
  return [k](const JetDiffeo& g) { return layer_action(g.linear_part(), k + 1); };
}

Representation transport_rep(const Representation& r, const Transport& mode) {
  std::vector<JetDiffeo> out;
  switch (mode.kind) {
    case Transport::Kind::project:
      for (const auto& g : r.images()) out.push_back(truncate(g, mode.order));
      break;
    case Transport::Kind::include:
      if (mode.order < 1) throw std::invalid_argument("include: order must be at least 1");
      for (const auto& g : r.images()) out.push_back(JetDiffeo::linear(g.linear_part(), mode.order));
      break;
    case Transport::Kind::dilate:
      if (mode.t.field() != r.field()) throw FieldMismatch();
      if (mode.t.sign() < 0) throw std::invalid_argument("dilate: t must be non-negative");
      for (const auto& g : r.images()) out.push_back(dilation_homotopy(mode.t, g));
      break;
  }
  return Representation(r.presentation(), std::move(out));
}

}  // namespace jetfol
