//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file quasilinear.hpp
//  \brief Conservative fluxes, the energy pair, and the frozen-coefficient
//         matrices B_j of the quasilinear form d_t U + sum_j B_j d_j U = 0.
//
//  Unknown ordering is (rho, v, H, p_par, p_perp) everywhere: indices
//  0, 1..3, 4..6, 7, 8. Zero-order (nondifferential) terms are dropped by
//  construction; the divergence constraint is folded in, so B_j carries no
//  coupling along the div-H direction.

#ifndef CGL_QUASILINEAR_HPP_
#define CGL_QUASILINEAR_HPP_

#include <array>

#include <Eigen/Core>

#include "cgl/smallmat.hpp"
#include "cgl/state.hpp"

namespace cgl {

inline constexpr int kRho = 0;
inline constexpr int kV = 1;    // v block 1..3
inline constexpr int kH = 4;    // H block 4..6
inline constexpr int kPpar = 7;
inline constexpr int kPperp = 8;

using Vector9 = Eigen::Matrix<double, 9, 1>;
using Matrix9 = Eigen::Matrix<double, 9, 9>;

// Flux of the nine conservation laws in spatial direction axis (0-based).
// Components: mass rho v_j; momentum rho v_j v + (tau-1) H_j H + q e_j;
// induction v_j H - H_j v; entropies rho s v_j.
Vector9 flux(const PlasmaState& u, int axis);

// Energy density rho E + |H|^2/2 and its flux
// rho E v + p_perp v + H x (v x H) + tau (v.H) H.
struct EnergyPair {
  double density;
  Vec3 flux;
};
EnergyPair energy(const PlasmaState& u);

// Frozen-coefficient matrix B_j at the background state. Scalar-generic: the
// unit-field products enter only as pairs b_i b_k = H_i H_k / |H|^2, so the
// assembly stays rational in the inputs.
template <class S>
Mat9<S> assemble_B_generic(const StateT<S>& u, int axis) {
  if (axis < 0 || axis > 2) throw DomainError("assemble_B: axis out of range");
  validate_generic(u);
  const S h2 = u.H2();
  const S tau = (u.p_par - u.p_perp) / h2;
  const S vj = u.v[axis];
  const S hj = u.H[axis];

  Mat9<S> B;
  for (int i = 0; i < 9; ++i) B(i, i) = vj;  // transport on the full diagonal

  // Mass: rho div v.
  for (int k = 0; k < 3; ++k)
    if (k == axis) B(kRho, kV + k) = u.rho;

  // Momentum (divided by rho):
  //   b_i (b . {grad(p_par - p_perp) - 2 tau (H.grad)H}) + (tau-1)(H.grad)H_i
  //   + d_i (p_perp + H.H).
  for (int i = 0; i < 3; ++i) {
    const S bibj_over = u.H[i] * hj / h2;  // b_i b_j
    B(kV + i, kPpar) = bibj_over / u.rho;
    B(kV + i, kPperp) = ((i == axis ? S(1) : S(0)) - bibj_over) / u.rho;
    for (int k = 0; k < 3; ++k) {
      S c = S(-2) * tau * u.H[i] * u.H[k] / h2 * hj;
      if (i == k) c += (tau - S(1)) * hj;
      if (i == axis) c += u.H[k];
      B(kV + i, kH + k) = c / u.rho;
    }
  }

  // Induction: -(H.grad)v + H div v.
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      S c = S(0);
      if (i == k) c -= hj;
      if (k == axis) c += u.H[i];
      B(kH + i, kV + k) = c;
    }

  // Pressures: p_par div v + 2 p_par b.(b.grad)v and
  //            2 p_perp div v - p_perp b.(b.grad)v.
  for (int k = 0; k < 3; ++k) {
    const S bjbk = hj * u.H[k] / h2;
    S cpar = S(2) * u.p_par * bjbk;
    S cperp = S(-1) * u.p_perp * bjbk;
    if (k == axis) {
      cpar += u.p_par;
      cperp += S(2) * u.p_perp;
    }
    B(kPpar, kV + k) = cpar;
    B(kPperp, kV + k) = cperp;
  }
  return B;
}

inline Matrix9 assemble_B(const PlasmaState& u, int axis) {
  return assemble_B_generic(as_generic(u), axis).eigen();
}

}  // namespace cgl

#endif  // CGL_QUASILINEAR_HPP_
