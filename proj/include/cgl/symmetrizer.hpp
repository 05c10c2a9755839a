//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file symmetrizer.hpp
//  \brief Algebraic symmetrization of the linearized CGL system.
//
//  New unknowns V = (p_perp, v, H, P, s_par) with
//    P     = p_perp/2 - p_par + tau (H0 . H),
//    s_par = p_par/(3 p0_par) - rho/rho0 + 2 (H0 . H)/(3 |H0|^2),
//  related to the perturbation U by V = J(U0) U. In these variables the
//  frozen-coefficient system is symmetric:
//    A0 d_t V + sum_j A_j d_j V = 0,
//    A0 = blockdiag(1/(2 p_perp), rho I, Bcal, 2/(6 p_par - p_perp), 1),
//    Bcal = (1 - tau) I + tau b (x) b,
//  and equivalence with the B_j form is the matrix identity
//    A_j J = A0 J B_j,   j = 1, 2, 3,
//  which consistency_identity() measures (and certifies exactly in rational
//  arithmetic). Everything here is algebraic in the state except |H|, so the
//  assembly is scalar-generic.

#ifndef CGL_SYMMETRIZER_HPP_
#define CGL_SYMMETRIZER_HPP_

#include <array>

#include <Eigen/Core>

#include "cgl/quasilinear.hpp"
#include "cgl/smallmat.hpp"
#include "cgl/state.hpp"

namespace cgl {

// V-ordering indices (same block sizes as the U ordering).
inline constexpr int kVPperp = 0;
inline constexpr int kVVel = 1;
inline constexpr int kVField = 4;
inline constexpr int kVP = 7;
inline constexpr int kVSpar = 8;

template <class S>
struct ChangeMatrixT {
  Mat9<S> J;
  Mat9<S> Jinv;
};

template <class S>
struct SymmetricSystemT {
  Mat9<S> A0;
  std::array<Mat9<S>, 3> A;      // A_1, A_2, A_3
  Mat<S, 3, 3> Bcal;             // (1 - tau) I + tau b (x) b
};

template <class S>
ChangeMatrixT<S> change_matrix_generic(const StateT<S>& u) {
  validate_generic(u);
  const S h2 = u.H2();
  const S tau = (u.p_par - u.p_perp) / h2;

  Mat9<S> J;
  J(kVPperp, kPperp) = S(1);
  for (int i = 0; i < 3; ++i) J(kVVel + i, kV + i) = S(1);
  for (int i = 0; i < 3; ++i) J(kVField + i, kH + i) = S(1);
  J(kVP, kPperp) = S(1) / S(2);
  J(kVP, kPpar) = S(-1);
  for (int k = 0; k < 3; ++k) J(kVP, kH + k) = tau * u.H[k];
  J(kVSpar, kPpar) = S(1) / (S(3) * u.p_par);
  J(kVSpar, kRho) = S(-1) / u.rho;
  for (int k = 0; k < 3; ++k) J(kVSpar, kH + k) = S(2) * u.H[k] / (S(3) * h2);

  // Closed-form inverse: p_perp, v, H read off directly,
  // p_par = p_perp/2 + tau (H0.H) - P, rho from the s_par row.
  Mat9<S> Ji;
  Ji(kPperp, kVPperp) = S(1);
  for (int i = 0; i < 3; ++i) Ji(kV + i, kVVel + i) = S(1);
  for (int i = 0; i < 3; ++i) Ji(kH + i, kVField + i) = S(1);
  Ji(kPpar, kVPperp) = S(1) / S(2);
  Ji(kPpar, kVP) = S(-1);
  for (int k = 0; k < 3; ++k) Ji(kPpar, kVField + k) = tau * u.H[k];
  // rho = rho0 (p_par/(3 p0_par) + 2 (H0.H)/(3 |H0|^2) - s_par)
  Ji(kRho, kVPperp) = u.rho / (S(6) * u.p_par);
  Ji(kRho, kVP) = S(-1) * u.rho / (S(3) * u.p_par);
  for (int k = 0; k < 3; ++k)
    Ji(kRho, kVField + k) =
        u.rho * u.H[k] * (tau / (S(3) * u.p_par) + S(2) / (S(3) * h2));
  Ji(kRho, kVSpar) = S(-1) * u.rho;
  return {J, Ji};
}

template <class S>
SymmetricSystemT<S> assemble_sym_generic(const StateT<S>& u) {
  validate_generic(u);
  const S h2 = u.H2();
  const S tau = (u.p_par - u.p_perp) / h2;
  const S w = S(6) * u.p_par - u.p_perp;
  if (w == S(0))
    throw SingularWeight("assemble_sym: 6 p_par - p_perp vanishes");

  SymmetricSystemT<S> s;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      S c = tau * u.H[i] * u.H[k] / h2;
      if (i == k) c += S(1) - tau;
      s.Bcal(i, k) = c;
    }

  s.A0(kVPperp, kVPperp) = S(1) / (S(2) * u.p_perp);
  for (int i = 0; i < 3; ++i) s.A0(kVVel + i, kVVel + i) = u.rho;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) s.A0(kVField + i, kVField + k) = s.Bcal(i, k);
  s.A0(kVP, kVP) = S(2) / w;
  s.A0(kVSpar, kVSpar) = S(1);

  for (int j = 0; j < 3; ++j) {
    Mat9<S>& A = s.A[j];
    const S vj = u.v[j];
    const S hj = u.H[j];

    A(kVPperp, kVPperp) = vj / (S(2) * u.p_perp);
    for (int k = 0; k < 3; ++k) {
      // e_j^T - (1/2) b_j b^T, with b_j b_k = H_j H_k / |H|^2
      S c = S(-1) * hj * u.H[k] / (S(2) * h2);
      if (k == j) c += S(1);
      A(kVPperp, kVVel + k) = c;
      A(kVVel + k, kVPperp) = c;
    }
    for (int i = 0; i < 3; ++i) {
      A(kVVel + i, kVVel + i) = u.rho * vj;
      for (int k = 0; k < 3; ++k) {
        // e_j (x) H - H_j Bcal
        S c = S(-1) * hj * s.Bcal(i, k);
        if (i == j) c += u.H[k];
        A(kVVel + i, kVField + k) = c;
        A(kVField + k, kVVel + i) = c;
        A(kVField + i, kVField + k) = vj * s.Bcal(i, k);
      }
      const S bjbi = hj * u.H[i] / h2;
      A(kVVel + i, kVP) = S(-1) * bjbi;
      A(kVP, kVVel + i) = S(-1) * bjbi;
    }
    A(kVP, kVP) = S(2) * vj / w;
    A(kVSpar, kVSpar) = vj;
  }
  return s;
}

using ChangeMatrix = ChangeMatrixT<double>;
using SymmetricSystem = SymmetricSystemT<double>;

ChangeMatrix change_matrix(const PlasmaState& u);
SymmetricSystem assemble_sym(const PlasmaState& u);

// Closed-form PD criterion for A0: tau < 1 and 6 p_par > p_perp.
bool a0_pd_criterion(const PlasmaState& u);
// Numeric route: Cholesky factorization of the assembled A0.
bool a0_pd_cholesky(const PlasmaState& u);
// Both routes; throws Error if they ever disagree.
bool a0_positive_definite(const PlasmaState& u);

struct ConsistencyResult {
  std::array<double, 3> residual;  // ||A_j J - A0 J B_j||_max, j = 1..3
  std::array<double, 3> scale;     // max entry magnitude of either side
};
ConsistencyResult consistency_identity(const PlasmaState& u);

// Exact-arithmetic form of the identity: returns the residual matrices
// A_j J - A0 J B_j; all three must be identically zero.
template <class S>
std::array<Mat9<S>, 3> consistency_residual_generic(const StateT<S>& u) {
  const auto cm = change_matrix_generic(u);
  const auto sys = assemble_sym_generic(u);
  std::array<Mat9<S>, 3> r;
  for (int j = 0; j < 3; ++j) {
    const Mat9<S> B = assemble_B_generic(u, j);
    r[j] = sys.A[j] * cm.J - sys.A0 * (cm.J * B);
  }
  return r;
}

// Sorted generalized eigenvalues of (sum_j n_j A_j, A0); they coincide with
// the eigenvalues of sum_j n_j B_j. Requires A0 positive definite and |n| = 1.
std::array<double, 9> char_speeds(const PlasmaState& u, const Vec3& n);

}  // namespace cgl

#endif  // CGL_SYMMETRIZER_HPP_
