#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetfol/fpgroup.hpp"

namespace jetfol {

struct BettiPair {
  std::size_t b1_w1 = 0, b1_w2 = 0;
  friend bool operator==(const BettiPair&, const BettiPair&) = default;
};

/// Checks rho0 is nonzero and multiplies to 1 along every relator.
void check_rho0(const Presentation& p, const std::vector<Scalar>& rho0);

/// Twisted H^1 dimensions for the actions rho0^{-1} and rho0^{-2}.
BettiPair betti_pair(const Presentation& p, const std::vector<Scalar>& rho0);

/// Raised for the zero orbit, which has no sphere representative.
class ZeroOrbit : public std::domain_error {
 public:
  ZeroOrbit() : std::domain_error("the zero class has no sphere representative") {}
};

struct OrbitRepresentative {
  std::vector<double> u, v;
  double s = 0;  // scale applied as (sqrt(s) u, s v)
};

/// Unique s > 0 with s|u|^2 + s^2|v|^2 = 1; returns (sqrt(s) u, s v).
OrbitRepresentative normalize_orbit(const std::vector<double>& u, const std::vector<double>& v);

/// Coefficients of quadratic * s^2 + linear * s - 1 = 0, for exact inputs.
struct OrbitEquation {
  Scalar quadratic, linear;
};
OrbitEquation orbit_equation(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

/// (u, v) -> (-u, v).
std::pair<std::vector<double>, std::vector<double>> z2_action(const std::vector<double>& u, const std::vector<double>& v);

struct ClassifyReport {
  BettiPair betti;
  std::optional<std::size_t> sphere_dim;  // empty when only the zero class exists
  std::string zero_point_note;
  std::string stratum() const;
};

ClassifyReport classify_b4(const Presentation& p, const std::vector<Scalar>& rho0);

}  // namespace jetfol
