//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file modes.hpp
//  \brief Plane-wave analysis of the frozen-coefficient CGL system.
//
//  For perturbations ~ exp(i(k.x - w t)) the frequencies w are the eigenvalues
//  of K = sum_j k_j B_j(U0). A positive imaginary part is exponential growth;
//  on the certified-hyperbolic set the spectrum is real.

#ifndef CGL_MODES_HPP_
#define CGL_MODES_HPP_

#include <array>
#include <complex>
#include <vector>

#include "cgl/quasilinear.hpp"
#include "cgl/state.hpp"

namespace cgl {

struct DispersionResult {
  Vec3 k;
  std::array<std::complex<double>, 9> omega;
  double growth_rate;  // max over modes of Im(omega)
};

DispersionResult dispersion(const PlasmaState& u, const Vec3& k);

struct GrowthEntry {
  Vec3 direction;
  double growth;  // at |k| = 1; rates are 1-homogeneous in |k|
};

std::vector<GrowthEntry> growth_scan(const PlasmaState& u,
                                     const std::vector<Vec3>& directions);

// Deterministic quasi-uniform unit vectors (Fibonacci sphere).
std::vector<Vec3> fibonacci_directions(int count);

using Vector9c = Eigen::Matrix<std::complex<double>, 9, 1>;

// Exact frozen-coefficient evolution V(t) = exp(-i t K) V0 via
// eigendecomposition. Throws DefectivePencil when the eigenvector matrix has
// condition number above 1e12.
Vector9c evolve_modal(const PlasmaState& u, const Vec3& k, const Vector9c& v0,
                      double t);

}  // namespace cgl

#endif  // CGL_MODES_HPP_
