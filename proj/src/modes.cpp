//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file modes.cpp

#include "cgl/modes.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace cgl {

namespace {

Matrix9 pencil(const PlasmaState& u, const Vec3& k) {
  Matrix9 K = Matrix9::Zero();
  for (int j = 0; j < 3; ++j)
    if (k[j] != 0.0) K += k[j] * assemble_B(u, j);
  return K;
}

}  // namespace

DispersionResult dispersion(const PlasmaState& u, const Vec3& k) {
  validate(u);
  DispersionResult r;
  r.k = k;
  if (k.squaredNorm() == 0.0) {
    r.omega.fill({0.0, 0.0});
    r.growth_rate = 0.0;
    return r;
  }
  Eigen::EigenSolver<Matrix9> es(pencil(u, k), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw SolverFailure("dispersion: eigensolver failed to converge");
  r.growth_rate = 0.0;
  for (int i = 0; i < 9; ++i) {
    r.omega[i] = es.eigenvalues()[i];
    r.growth_rate = std::max(r.growth_rate, r.omega[i].imag());
  }
  return r;
}

std::vector<GrowthEntry> growth_scan(const PlasmaState& u,
                                     const std::vector<Vec3>& directions) {
  std::vector<GrowthEntry> out;
  out.reserve(directions.size());
  for (const Vec3& n : directions)
    out.push_back({n, dispersion(u, n).growth_rate});
  return out;
}

std::vector<Vec3> fibonacci_directions(int count) {
  std::vector<Vec3> dirs;
  dirs.reserve(count);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

Vector9c evolve_modal(const PlasmaState& u, const Vec3& k, const Vector9c& v0,
                      double t) {
  validate(u);
  if (t == 0.0 || k.squaredNorm() == 0.0) return v0;

  Eigen::EigenSolver<Matrix9> es(pencil(u, k), /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw SolverFailure("evolve_modal: eigensolver failed to converge");

  const Eigen::Matrix<std::complex<double>, 9, 9> S = es.eigenvectors();
  Eigen::JacobiSVD<Eigen::Matrix<std::complex<double>, 9, 9>> svd(S);
  const double cond =
      svd.singularValues()(0) / svd.singularValues()(8);
  if (!(cond < 1e12))
    throw DefectivePencil("evolve_modal: eigenvector matrix is numerically singular");

  const Vector9c y = S.partialPivLu().solve(v0);
  Vector9c out = Vector9c::Zero();
  const std::complex<double> mi(0.0, -1.0);
  for (int i = 0; i < 9; ++i)
    out += std::exp(mi * t * es.eigenvalues()[i]) * y[i] * S.col(i);
  return out;
}

}  // namespace cgl
