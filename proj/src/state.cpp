//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file state.cpp

#include "cgl/state.hpp"

#include <cmath>

namespace cgl {

void validate(const PlasmaState& u) {
  if (!(u.rho > 0.0)) throw DomainError("state: rho must be positive");
  if (!(u.p_par > 0.0)) throw DomainError("state: p_par must be positive");
  if (!(u.p_perp > 0.0)) throw DomainError("state: p_perp must be positive");
  if (!(u.H.norm() >= kFieldFloor))
    throw DomainError("state: magnetic field magnitude below floor");
}

DerivedQuantities derive(const PlasmaState& u) {
  validate(u);
  const double h2 = u.H.squaredNorm();
  const double h = std::sqrt(h2);
  DerivedQuantities d;
  d.tau = (u.p_par - u.p_perp) / h2;
  d.q = u.p_perp + 0.5 * h2;
  d.b = u.H / h;
  d.a_p = u.p_perp / u.p_par;
  d.beta_perp = 2.0 * u.p_perp / h2;
  d.s_par = std::log(u.p_par * h2 / (u.rho * u.rho * u.rho)) / 3.0;
  d.s_perp = 2.0 / 3.0 * std::log(u.p_perp / (u.rho * h));
  d.e = u.p_perp / u.rho + 0.5 * u.p_par / u.rho;
  d.E = d.e + 0.5 * u.v.squaredNorm();
  return d;
}

ConservedState to_conserved(const PlasmaState& u) {
  const DerivedQuantities d = derive(u);
  return {u.rho, u.rho * u.v, u.H, u.rho * d.s_par, u.rho * d.s_perp};
}

PlasmaState from_conserved(const ConservedState& w) {
  if (!(w.rho > 0.0)) throw DomainError("from_conserved: rho must be positive");
  const double h = w.H.norm();
  if (!(h >= kFieldFloor))
    throw DomainError("from_conserved: magnetic field magnitude below floor");
  const double s_par = w.rho_s_par / w.rho;
  const double s_perp = w.rho_s_perp / w.rho;
  PlasmaState u;
  u.rho = w.rho;
  u.v = w.mom / w.rho;
  u.H = w.H;
  u.p_par = w.rho * w.rho * w.rho * std::exp(3.0 * s_par) / (h * h);
  u.p_perp = w.rho * h * std::exp(1.5 * s_perp);
  return u;
}

}  // namespace cgl
