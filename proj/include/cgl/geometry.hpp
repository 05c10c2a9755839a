//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file geometry.hpp
//  \brief Interface geometry: cut-off, lifting map Phi = x1 + chi(x1) phi(x'),
//         normals, the Phi-composed derivative operators, constraint residuals,
//         and the Alinhac good-unknown transform.

#ifndef CGL_GEOMETRY_HPP_
#define CGL_GEOMETRY_HPP_

#include <array>
#include <vector>

#include "cgl/grid.hpp"
#include "cgl/state.hpp"

namespace cgl {

// Even C^2 bump: 1 on [-plateau, plateau], 0 outside (-support, support),
// stored as piecewise polynomials on the positive half axis. The transition
// is ramp / constant-slope / ramp so the derivative bound stays close to the
// unavoidable mean slope; a single smoothstep could not satisfy the bound
// ||chi'|| < 4/(phi0_sup + 3) on (-1,1).
class CutOff {
 public:
  struct Piece {
    double lo, hi;
    std::array<double, 6> c;  // chi(x) = sum c[k] (x - lo)^k on [lo, hi]
  };

  double operator()(double x) const;
  double deriv(double x) const;

  double deriv_bound() const { return deriv_bound_; }
  double plateau() const { return plateau_; }
  double support() const { return support_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  friend CutOff build_cutoff(double phi0_sup);
  std::vector<Piece> pieces_;
  double deriv_bound_ = 0.0;
  double plateau_ = 0.0;
  double support_ = 0.0;
};

// Constructs a cut-off with ||chi'|| strictly below 4/(phi0_sup + 3); the
// bound is re-verified from the stored coefficients' derivative extrema.
// Feasible for every phi0_sup in [0, 1).
CutOff build_cutoff(double phi0_sup);

struct InterfaceGeometry {
  SurfaceGrid grid;
  SurfaceField phi;     // height, |phi| < 1
  SurfaceField phi_t;   // d_t phi (zero for static interfaces)
  SurfaceField dphi2;   // tangential central differences of phi
  SurfaceField dphi3;
  SurfaceField normal;  // N = (1, -d2 phi, -d3 phi), 3 components
  CutOff chi;
  double d1Phi_min = 1.0;

  double Phi(double x1, int i2, int i3) const {
    return x1 + chi(x1) * phi.at(0, i2, i3);
  }
  double d1Phi(double x1, int i2, int i3) const {
    return 1.0 + chi.deriv(x1) * phi.at(0, i2, i3);
  }
  double dtPhi(double x1, int i2, int i3) const {
    return chi(x1) * phi_t.at(0, i2, i3);
  }
  double djPhi(int axis, double x1, int i2, int i3) const {
    return chi(x1) * (axis == 1 ? dphi2.at(0, i2, i3) : dphi3.at(0, i2, i3));
  }
};

// Requires ||phi|| < 1; throws DegenerateLift if the invertibility bound
// 1 - ||chi'|| ||phi|| falls to 1e-6 or below.
InterfaceGeometry lift(const SurfaceField& phi, const CutOff& chi);
InterfaceGeometry lift(const SurfaceField& phi, const SurfaceField& phi_t,
                       const CutOff& chi);

enum class DPhi { t = 0, d1 = 1, d2 = 2, d3 = 3 };

// Plain second-order partials on the slab: central inside, one-sided at the
// x1 walls, periodic in x2/x3.
SlabField plain_derivative(const SlabField& f, int axis);

// The Phi-composed operators. d1 -> d1 f / d1 Phi;
// dj -> dj f - (dj Phi / d1 Phi) d1 f; t -> -(dt Phi / d1 Phi) d1 f, i.e. the
// geometric correction for a frozen-in-time field.
SlabField dphi_apply(const InterfaceGeometry& g, const SlabField& f, DPhi which);

struct ConstraintResiduals {
  double interior_div;   // L-inf of div^Phi H over the slab
  double sigma_normal;   // L-inf of H.N on Sigma (x1 = 0)
  double sigma_plus_h1;  // L-inf of H1 on Sigma^+ (x1 = 1)
};

ConstraintResiduals constraint_residuals(const SlabField& H,
                                         const InterfaceGeometry& g);

// Alinhac transform: Udot = U - (Psi / d1 Phi0) d1 U0 with Psi = chi(x1) psi.
SlabField good_unknown(const SlabField& U, const SurfaceField& psi,
                       const InterfaceGeometry& g0, const SlabField& U0);

// Fixed-domain quasilinear operator built from the B_j coefficients:
//   Btilde1(U,Phi) d1 U + B2(U) d2 U + B3(U) d3 U,
// Btilde1 = (B1 - dtPhi I - d2Phi B2 - d3Phi B3)/d1Phi. U holds full states
// (9 components); every cell must be a valid state.
SlabField apply_plasma_operator(const InterfaceGeometry& g, const SlabField& U);

}  // namespace cgl

#endif  // CGL_GEOMETRY_HPP_
