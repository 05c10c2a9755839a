//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file state.hpp
//  \brief Plasma state, derived constitutive quantities, and primary<->conserved maps.

#ifndef CGL_STATE_HPP_
#define CGL_STATE_HPP_

#include <array>

#include <Eigen/Core>

#include "cgl/errors.hpp"

namespace cgl {

using Vec3 = Eigen::Vector3d;

// Primary unknowns (rho, v, H, p_par, p_perp). Model validity requires
// rho > 0, p_par > 0, p_perp > 0 and H != 0; anything else is rejected, the
// anisotropy factor is undefined at H = 0.
struct PlasmaState {
  double rho = 1.0;
  Vec3 v = Vec3::Zero();
  Vec3 H = Vec3::UnitX();
  double p_par = 1.0;
  double p_perp = 1.0;
};

// Reject |H| below this instead of regularizing.
inline constexpr double kFieldFloor = 1e-300;

void validate(const PlasmaState& u);

struct DerivedQuantities {
  double tau;        // (p_par - p_perp)/|H|^2
  double q;          // p_perp + |H|^2/2
  Vec3 b;            // H/|H|
  double a_p;        // p_perp/p_par
  double beta_perp;  // 2 p_perp/|H|^2
  double s_par;      // (1/3) ln(p_par |H|^2 / rho^3)
  double s_perp;     // (2/3) ln(p_perp / (rho |H|))
  double e;          // p_perp/rho + p_par/(2 rho)
  double E;          // e + |v|^2/2
};

DerivedQuantities derive(const PlasmaState& u);

// Densities of the nine conservation laws: (rho, rho v, H, rho s_par, rho s_perp).
struct ConservedState {
  double rho;
  Vec3 mom;
  Vec3 H;
  double rho_s_par;
  double rho_s_perp;

  std::array<double, 9> flat() const {
    return {rho, mom[0], mom[1], mom[2], H[0], H[1], H[2], rho_s_par, rho_s_perp};
  }
  static ConservedState from_flat(const std::array<double, 9>& w) {
    return {w[0], Vec3(w[1], w[2], w[3]), Vec3(w[4], w[5], w[6]), w[7], w[8]};
  }
};

ConservedState to_conserved(const PlasmaState& u);
PlasmaState from_conserved(const ConservedState& w);

// Scalar-generic mirror of PlasmaState for code paths instantiated with an
// exact rational scalar alongside double.
template <class S>
struct StateT {
  S rho{};
  std::array<S, 3> v{};
  std::array<S, 3> H{};
  S p_par{};
  S p_perp{};

  S H2() const { return H[0] * H[0] + H[1] * H[1] + H[2] * H[2]; }
};

inline StateT<double> as_generic(const PlasmaState& u) {
  return {u.rho, {u.v[0], u.v[1], u.v[2]}, {u.H[0], u.H[1], u.H[2]}, u.p_par, u.p_perp};
}

template <class S>
void validate_generic(const StateT<S>& u) {
  if (!(u.rho > S(0))) throw DomainError("state: rho must be positive");
  if (!(u.p_par > S(0))) throw DomainError("state: p_par must be positive");
  if (!(u.p_perp > S(0))) throw DomainError("state: p_perp must be positive");
  if (u.H2() == S(0)) throw DomainError("state: magnetic field must not vanish");
}

}  // namespace cgl

#endif  // CGL_STATE_HPP_
