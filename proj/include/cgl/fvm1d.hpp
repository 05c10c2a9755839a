//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file fvm1d.hpp
//  \brief First-order Rusanov finite-volume solver for the nonlinear 1D CGL
//         conservation laws (variation in x1 only, periodic domain of unit
//         length). The wave-speed bound comes from the symmetrizer's
//         characteristic speeds. H1 is uniform by the divergence constraint
//         and is preserved bit-exactly.

#ifndef CGL_FVM1D_HPP_
#define CGL_FVM1D_HPP_

#include <array>
#include <vector>

#include "cgl/state.hpp"

namespace cgl {

struct Grid1D {
  double dx = 0.0;
  double H1 = 0.0;
  std::vector<std::array<double, 9>> w;  // cell-averaged conserved states

  int n() const { return static_cast<int>(w.size()); }
  double center(int i) const { return (i + 0.5) * dx; }
};

// Builds a periodic grid of unit length from per-cell primitive states; all
// cells must share the same H1 exactly.
Grid1D make_grid1d(const std::vector<PlasmaState>& cells);

PlasmaState primitive(const Grid1D& g, int i);

// Nine conserved totals plus the energy integral, each times dx.
std::array<double, 10> totals(const Grid1D& g);

struct StepResult {
  double dt;
  double max_speed;
};

// One Rusanov update at the given CFL number; dt is capped by dt_cap so runs
// can land exactly on a final time. Throws HyperbolicityLoss if a cell is
// outside the hyperbolic region before the step or invalid after it.
StepResult step(Grid1D& g, double cfl, double dt_cap = 1e300);

struct RunDiagnostics {
  std::array<double, 10> initial = {};
  std::array<double, 10> final_totals = {};
  std::array<double, 10> max_drift = {};       // max |total(t) - total(0)|
  std::vector<std::array<double, 11>> series;  // t followed by the 10 totals
  std::vector<double> cfl_history;             // realized a dt/dx per step
  int steps = 0;
};

struct RunResult {
  Grid1D grid;
  RunDiagnostics diag;
};

RunResult run(Grid1D initial, double cfl, double T, int max_steps = 1000000);

// Semi-Lagrangian check of the double-adiabatic invariants
// mu1 = p_par |H|^2 / rho^3 and mu2 = p_perp / (rho |H|): particles advected
// with the cell velocity field (RK2, periodic linear interpolation), reporting
// the max relative drift of each invariant along each path.
struct AdiabaticDrift {
  std::vector<double> mu1;  // per particle
  std::vector<double> mu2;
};

AdiabaticDrift track_adiabatic(Grid1D initial, double cfl, double T,
                               const std::vector<double>& positions);

}  // namespace cgl

#endif  // CGL_FVM1D_HPP_
