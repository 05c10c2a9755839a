//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file vacuum.hpp
//  \brief Vacuum pre-Maxwell (div-curl) solvers on the slab (-1,0) x T^2.
//
//  The first-order system is sum_j A_j d_j h = 0 with the four constant 4x3
//  matrices (three curl rows, one divergence row), boundary rows h.N = 0 on
//  Sigma = {0} x T^2 and h x e1 = j_c on Sigma^- = {-1} x T^2. A flat
//  interface admits an exact harmonic-potential modal solution (the oracle);
//  the curved problem discretizes the operator L_-(Phi) verbatim and solves
//  the overdetermined system by least squares, so the residual doubles as a
//  consistency certificate.

#ifndef CGL_VACUUM_HPP_
#define CGL_VACUUM_HPP_

#include <complex>
#include <vector>

#include "cgl/geometry.hpp"
#include "cgl/grid.hpp"

namespace cgl {

// Surface current as Fourier data on T^2. Each stored mode (k2,k3,c2,c3) is
// the coefficient of exp(2 pi i k.x') for the tangential components; the
// conjugate partner at -k is implied so the field is real. Component 1 is
// identically zero by construction. Mean mode must have real coefficients.
struct SurfaceCurrent {
  struct Mode {
    int k2 = 0, k3 = 0;
    std::complex<double> c2{0.0, 0.0};
    std::complex<double> c3{0.0, 0.0};
  };
  std::vector<Mode> modes;

  // Throws IncompatibleCurrent when k2 c2 + k3 c3 exceeds the tolerance for
  // some nonzero mode (the solvability condition of the flat problem), or the
  // mean mode is not real.
  void validate(double tol = 1e-10) const;

  SurfaceField evaluate(const SurfaceGrid& grid) const;

  // Collocation DFT of tangential grid data; throws IncompatibleCurrent if
  // component 1 is not zero to tolerance.
  static SurfaceCurrent from_grid(const SurfaceField& jc, int max_mode,
                                  double tol = 1e-10);
};

struct VacuumResiduals {
  double curl = 0.0;         // max over the three curl rows
  double div = 0.0;
  double bc_sigma = 0.0;     // h.N on Sigma
  double bc_sigma_minus = 0.0;  // h x e1 - j_c on Sigma^-
  double scale = 0.0;        // max |h|
};

struct VacuumField {
  SlabField h;  // 3 components on the (-1,0) x T^2 grid
  VacuumResiduals residuals;

  SurfaceField trace_sigma() const;        // x1 = 0 wall
  SurfaceField trace_sigma_minus() const;  // x1 = -1 wall
};

// Exact modal solve for the flat interface. Modes above max_mode in either
// index are rejected. Residuals are evaluated analytically per mode.
VacuumField solve_flat(const SurfaceCurrent& jc, int max_mode,
                       const SlabGrid& grid);

struct CurvedSolveOptions {
  double cg_tolerance = 1e-12;
  int max_iterations = 40000;
  // Boundary rows are scaled by boundary_weight/sqrt(d1) relative to interior
  // rows, matching the continuous least-squares functional.
  double boundary_weight = 1.0;
  // Relative least-squares residual above this signals incompatible data or
  // degenerate geometry.
  double failure_threshold = 0.3;
};

struct CurvedSolveInfo {
  double ls_residual = 0.0;  // ||A x - b|| / ||b|| (0 when b = 0)
  int iterations = 0;
};

// General driver with explicit boundary data: h.N = bc_sigma on Sigma and
// (h3, -h2) = bc_minus on Sigma^-. Used directly by manufactured-solution
// studies.
VacuumField solve_div_curl_ls(const InterfaceGeometry& g, const SlabGrid& grid,
                              const SurfaceField& bc_sigma,
                              const SurfaceField& bc_minus,
                              const CurvedSolveOptions& opts,
                              CurvedSolveInfo* info = nullptr);

// The interface problem: homogeneous h.N on Sigma, tangential trace j_c on
// Sigma^-.
VacuumField solve_curved(const InterfaceGeometry& g, const SurfaceCurrent& jc,
                         const SlabGrid& grid,
                         const CurvedSolveOptions& opts = {},
                         CurvedSolveInfo* info = nullptr);

struct NonCollinearity {
  double min_cross = 0.0;  // min |H x h| over Sigma
  int i2 = 0, i3 = 0;      // location of the minimum
};

NonCollinearity non_collinearity(const SurfaceField& Htrace,
                                 const SurfaceField& htrace);

struct RtSignResult {
  double max_value = 0.0;   // max over Sigma of n . grad(q - |h|^2/2)
  SurfaceField values;      // pointwise values
  bool satisfied(double kappa) const { return max_value <= -kappa; }
};

// Outward unit normal n = -N/|N|: it points from the plasma slab into the
// vacuum slab (x1 < phi is vacuum). q lives on the plasma grid, h on the
// vacuum grid; one-sided normal derivatives are combined across Sigma.
RtSignResult rt_sign(const SlabField& qfield, const VacuumField& h,
                     const InterfaceGeometry& g);

}  // namespace cgl

#endif  // CGL_VACUUM_HPP_
