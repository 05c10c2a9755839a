//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file quasilinear.cpp

#include "cgl/quasilinear.hpp"

#include <Eigen/Geometry>

namespace cgl {

Vector9 flux(const PlasmaState& u, int axis) {
  if (axis < 0 || axis > 2) throw DomainError("flux: axis out of range");
  const DerivedQuantities d = derive(u);
  const double vj = u.v[axis];
  const double hj = u.H[axis];

  Vector9 f;
  f[kRho] = u.rho * vj;
  const Vec3 mom = u.rho * vj * u.v + (d.tau - 1.0) * hj * u.H;
  for (int i = 0; i < 3; ++i) f[kV + i] = mom[i] + (i == axis ? d.q : 0.0);
  const Vec3 ind = vj * u.H - hj * u.v;
  for (int i = 0; i < 3; ++i) f[kH + i] = ind[i];
  f[kPpar] = u.rho * d.s_par * vj;
  f[kPperp] = u.rho * d.s_perp * vj;
  return f;
}

EnergyPair energy(const PlasmaState& u) {
  const DerivedQuantities d = derive(u);
  EnergyPair e;
  e.density = u.rho * d.E + 0.5 * u.H.squaredNorm();
  e.flux = u.rho * d.E * u.v + u.p_perp * u.v + u.H.cross(u.v.cross(u.H)) +
           d.tau * u.v.dot(u.H) * u.H;
  return e;
}

}  // namespace cgl
