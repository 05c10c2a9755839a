//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file symmetrizer.cpp

#include "cgl/symmetrizer.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace cgl {

ChangeMatrix change_matrix(const PlasmaState& u) {
  return change_matrix_generic(as_generic(u));
}

SymmetricSystem assemble_sym(const PlasmaState& u) {
  return assemble_sym_generic(as_generic(u));
}

bool a0_pd_criterion(const PlasmaState& u) {
  validate(u);
  const double tau = (u.p_par - u.p_perp) / u.H.squaredNorm();
  return tau < 1.0 && 6.0 * u.p_par > u.p_perp;
}

bool a0_pd_cholesky(const PlasmaState& u) {
  SymmetricSystem s;
  try {
    s = assemble_sym(u);
  } catch (const SingularWeight&) {
    return false;
  }
  const Matrix9 a0 = s.A0.eigen();
  Eigen::LLT<Matrix9> llt(a0);
  if (llt.info() != Eigen::Success) return false;
  // LLT can succeed on matrices with nonpositive trailing pivots when the
  // leading block dominates; confirm via the factor's diagonal.
  return llt.matrixLLT().diagonal().minCoeff() > 0.0;
}

bool a0_positive_definite(const PlasmaState& u) {
  const bool closed = a0_pd_criterion(u);
  const bool numeric = a0_pd_cholesky(u);
  if (closed != numeric)
    throw Error("a0_positive_definite: closed-form and Cholesky routes disagree");
  return closed;
}

ConsistencyResult consistency_identity(const PlasmaState& u) {
  const auto cm = change_matrix(u);
  const auto sys = assemble_sym(u);
  const Matrix9 J = cm.J.eigen();
  const Matrix9 A0J = sys.A0.eigen() * J;

  ConsistencyResult out;
  for (int j = 0; j < 3; ++j) {
    const Matrix9 lhs = sys.A[j].eigen() * J;
    const Matrix9 rhs = A0J * assemble_B(u, j);
    out.residual[j] = (lhs - rhs).cwiseAbs().maxCoeff();
    out.scale[j] = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  }
  return out;
}

std::array<double, 9> char_speeds(const PlasmaState& u, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-8)
    throw DomainError("char_speeds: direction must be a unit vector");
  if (!a0_positive_definite(u))
    throw NotPositiveDefinite("char_speeds: A0 is not positive definite");

  const auto sys = assemble_sym(u);
  Matrix9 An = Matrix9::Zero();
  for (int j = 0; j < 3; ++j) An += n[j] * sys.A[j].eigen();
  const Matrix9 A0 = sys.A0.eigen();

  // Symmetric reduction through the Cholesky factor of A0 keeps the spectrum
  // real by construction.
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix9> es(An, A0,
                                                       Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw SolverFailure("char_speeds: generalized eigensolve failed");

  std::array<double, 9> speeds;
  for (int i = 0; i < 9; ++i) speeds[i] = es.eigenvalues()[i];
  std::sort(speeds.begin(), speeds.end());
  return speeds;
}

}  // namespace cgl
