#include "jetfol/charvar.hpp"

#include <cmath>

#include "jetfol/obstruction.hpp"

namespace jetfol {

void check_rho0(const Presentation& p, const std::vector<Scalar>& rho0) {
  if (rho0.size() != static_cast<std::size_t>(p.rank())) throw std::invalid_argument("rho0 needs one value per generator");
  for (std::size_t g = 0; g < rho0.size(); ++g)
    if (rho0[g].is_zero()) throw std::invalid_argument("rho0(" + p.generators()[g] + ") is zero");
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    Scalar prod = Scalar::one(rho0.front().field());
    for (const auto& x : p.relators()[r].letters) prod *= rho0[static_cast<std::size_t>(x.generator)].pow(x.sign);
    if (!prod.is_one()) throw std::invalid_argument("rho0 violates relator " + std::to_string(r + 1));
  }
}

BettiPair betti_pair(const Presentation& p, const std::vector<Scalar>& rho0) {
  check_rho0(p, rho0);
  std::vector<Scalar> w1, w2;
  for (const auto& s : rho0) {
    w1.push_back(s.pow(-1));
    w2.push_back(s.pow(-2));
  }
  return BettiPair{twisted_h1(p, ModuleAction::scalar(w1)).h1, twisted_h1(p, ModuleAction::scalar(w2)).h1};
}

OrbitRepresentative normalize_orbit(const std::vector<double>& u, const std::vector<double>& v) {
  double uu = 0, vv = 0;
  for (double x : u) uu += x * x;
  for (double x : v) vv += x * x;
  if (uu == 0 && vv == 0) throw ZeroOrbit();
  // Rationalized root of vv s^2 + uu s - 1 = 0; stable when either norm vanishes.
  const double s = 2.0 / (uu + std::sqrt(uu * uu + 4.0 * vv));
  OrbitRepresentative r{u, v, s};
  const double rs = std::sqrt(s);
  for (double& x : r.u) x *= rs;
  for (double& x : r.v) x *= s;
  return r;
}

OrbitEquation orbit_equation(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (u.empty() && v.empty()) throw ZeroOrbit();
  const Field f = (u.empty() ? v : u).front().field();
  Scalar uu = Scalar::zero(f), vv = Scalar::zero(f);
  for (const auto& x : u) uu += x * x;
  for (const auto& x : v) vv += x * x;
  if (uu.is_zero() && vv.is_zero()) throw ZeroOrbit();
  return OrbitEquation{vv, uu};
}

std::pair<std::vector<double>, std::vector<double>> z2_action(const std::vector<double>& u, const std::vector<double>& v) {
  std::vector<double> nu(u);
  for (double& x : nu) x = -x;
  return {nu, v};
}

std::string ClassifyReport::stratum() const {
  return sphere_dim ? "S^" + std::to_string(*sphere_dim) : std::string("point");
}

ClassifyReport classify_b4(const Presentation& p, const std::vector<Scalar>& rho0) {
  ClassifyReport r;
  r.betti = betti_pair(p, rho0);
  const std::size_t total = r.betti.b1_w1 + r.betti.b1_w2;
  if (total > 0) r.sphere_dim = total - 1;
  r.zero_point_note =
      "the class of the linear extension (0,0) lies in the closure of every other point; the orbit space is " +
      std::string(total > 0 ? "the sphere stratum plus this non-Hausdorff point" : "this single point");
  return r;
}

}  // namespace jetfol
