//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file boundary.hpp
//  \brief Interface boundary operators: the nonlinear rows, the effective
//         linearized rows in good unknowns, the boundary matrix on Sigma and
//         its reduction, and the quadratic-form identity
//         (Atilde1 Vdot . Vdot)|_Sigma = 2 qdot (vdot . N).

#ifndef CGL_BOUNDARY_HPP_
#define CGL_BOUNDARY_HPP_

#include <array>
#include <utility>
#include <vector>

#include "cgl/grid.hpp"
#include "cgl/hyperbolicity.hpp"
#include "cgl/smallmat.hpp"
#include "cgl/symmetrizer.hpp"

namespace cgl {

// Trace data for the nonlinear boundary operator. U and h live on Sigma,
// (H1, v1) on Sigma^+, h and j_c on Sigma^-; phi and its derivatives on T^2.
struct BoundaryData {
  SurfaceGrid grid;
  SurfaceField U;        // 9 components on Sigma
  SurfaceField h;        // 3 components on Sigma
  SurfaceField phi;      // scalar
  SurfaceField phi_t;    // scalar
  SurfaceField plus_H1v1;  // 2 components on Sigma^+: (H1, v1)
  SurfaceField h_minus;  // 3 components on Sigma^-
  SurfaceField jc;       // 3 components on Sigma^-
};

// The seven scalar rows: (d_t phi - v.N, q - |h|^2/2, h.N) on Sigma, v1 on
// Sigma^+, and the three components of h x e1 - j_c on Sigma^-.
struct BoundaryResiduals {
  std::array<SurfaceField, 7> rows;
  std::array<double, 7> linf() const {
    std::array<double, 7> m{};
    for (int i = 0; i < 7; ++i) m[i] = rows[i].max_abs();
    return m;
  }
};

BoundaryResiduals nonlinear_residual(const BoundaryData& bd);

// Basic state around which the problem is linearized: traces and one-sided
// x1-derivatives on the boundary.
struct BasicState {
  SurfaceGrid grid;
  SurfaceField U;      // 9 on Sigma
  SurfaceField h;      // 3 on Sigma
  SurfaceField d1U;    // 9 on Sigma
  SurfaceField d1h;    // 3 on Sigma
  SurfaceField phi, phi_t, dphi2, dphi3;  // scalars
  SurfaceField v1_plus;   // 1 on Sigma^+
  SurfaceField h_minus;   // 3 on Sigma^-
  SurfaceField jc;        // 3 on Sigma^-

  Vec3 normal(int i2, int i3) const {
    return {1.0, -dphi2.at(0, i2, i3), -dphi3.at(0, i2, i3)};
  }
  // b1 = -d1 v . N and b2 = d1 p_perp + H.d1 H - h.d1 h on Sigma.
  double b1(int i2, int i3) const;
  double b2(int i2, int i3) const;
};

struct BasicStateReport {
  double hyp_margin_violation = 0.0;  // worst shortfall of the (20) margins
  double transport = 0.0;             // L-inf of d_t phi - v.N
  double h_normal = 0.0;              // L-inf of h.N on Sigma
  double H_normal = 0.0;              // L-inf of H.N on Sigma
  double h_compat = 0.0;              // L-inf of d1 h.N + d2 h2 + d3 h3
  double v1_plus = 0.0;               // L-inf of v1 on Sigma^+
  double jc_match = 0.0;              // L-inf of h x e1 - j_c on Sigma^-
  bool ok(double tol) const {
    return hyp_margin_violation <= 0.0 && transport <= tol && h_normal <= tol &&
           H_normal <= tol && h_compat <= tol && v1_plus <= tol && jc_match <= tol;
  }
};

BasicStateReport verify_basic_state(const BasicState& bs, const Thresholds& thr);

// Throws BasicStateViolation with a quantitative message unless ok(tol).
void require_basic_state(const BasicState& bs, const Thresholds& thr,
                         double tol = 1e-9);

struct LinearPerturbation {
  SurfaceField dotU;       // 9 on Sigma (good unknowns)
  SurfaceField doth;       // 3 on Sigma
  SurfaceField psi, psi_t; // scalars on T^2
  SurfaceField dotv1_plus; // 1 on Sigma^+
  SurfaceField doth_minus; // 3 on Sigma^-
};

// Rows of the effective linearized operator:
//   (d_t + v'.D' + b1) psi - vdot.N, pdot_perp + H.Hdot - h.hdot + b2 psi,
//   hdot.N - D'.(h' psi), vdot_1, hdot x e1.
// The basic state is verified first.
BoundaryResiduals linearized_residual(const BasicState& bs,
                                      const LinearPerturbation& lp,
                                      const Thresholds& thr,
                                      double tol = 1e-9);

// Pointwise boundary-matrix data; scalar-generic (the unit-field products
// again only appear in pairs, so assembly is rational in the inputs).
template <class S>
struct BoundaryPoint {
  S rho, p_par, p_perp;
  std::array<S, 3> v, H, N;
  S phi_t;  // m = v.N - phi_t
};

template <class S>
Mat9<S> boundary_matrix_full(const BoundaryPoint<S>& p) {
  const S h2 = p.H[0] * p.H[0] + p.H[1] * p.H[1] + p.H[2] * p.H[2];
  if (h2 == S(0)) throw DomainError("boundary_matrix: H must not vanish");
  const S w = S(6) * p.p_par - p.p_perp;
  if (w == S(0)) throw SingularWeight("boundary_matrix: 6 p_par = p_perp");
  const S tau = (p.p_par - p.p_perp) / h2;
  const S vn = p.v[0] * p.N[0] + p.v[1] * p.N[1] + p.v[2] * p.N[2];
  const S m = vn - p.phi_t;
  const S hn = p.H[0] * p.N[0] + p.H[1] * p.N[1] + p.H[2] * p.N[2];

  Mat9<S> A;
  A(kVPperp, kVPperp) = m / (S(2) * p.p_perp);
  for (int k = 0; k < 3; ++k) {
    // N^T - (1/2)(b.N) b^T with (b.N) b_k = hn H_k / |H|^2
    const S c = p.N[k] - hn * p.H[k] / (S(2) * h2);
    A(kVPperp, kVVel + k) = c;
    A(kVVel + k, kVPperp) = c;
  }
  for (int i = 0; i < 3; ++i) {
    A(kVVel + i, kVVel + i) = p.rho * m;
    for (int k = 0; k < 3; ++k) {
      S bcal = tau * p.H[i] * p.H[k] / h2;
      if (i == k) bcal += S(1) - tau;
      const S c = p.N[i] * p.H[k] - hn * bcal;
      A(kVVel + i, kVField + k) = c;
      A(kVField + k, kVVel + i) = c;
      A(kVField + i, kVField + k) = m * bcal;
    }
    const S bnb = hn * p.H[i] / h2;
    A(kVVel + i, kVP) = S(-1) * bnb;
    A(kVP, kVVel + i) = S(-1) * bnb;
  }
  A(kVP, kVP) = S(2) * m / w;
  A(kVSpar, kVSpar) = m;
  return A;
}

template <class S>
Mat9<S> boundary_matrix_reduced(const BoundaryPoint<S>& p) {
  Mat9<S> A;
  for (int k = 0; k < 3; ++k) {
    A(kVPperp, kVVel + k) = p.N[k];
    A(kVVel + k, kVPperp) = p.N[k];
  }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      A(kVVel + i, kVField + k) = p.N[i] * p.H[k];
      A(kVField + k, kVVel + i) = p.N[i] * p.H[k];
    }
  return A;
}

// Returns (Atilde1 Vdot . Vdot, 2 qdot (vdot . N)) with qdot = pdot_perp + H.Hdot.
template <class S>
std::pair<S, S> boundary_quadratic(const BoundaryPoint<S>& p, const Vec9<S>& dotV) {
  const Mat9<S> A = boundary_matrix_full(p);
  S form(0);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) form += dotV(i, 0) * A(i, j) * dotV(j, 0);
  S qdot = dotV(kVPperp, 0);
  for (int k = 0; k < 3; ++k) qdot += p.H[k] * dotV(kVField + k, 0);
  S vdotn(0);
  for (int k = 0; k < 3; ++k) vdotn += p.N[k] * dotV(kVVel + k, 0);
  return {form, S(2) * qdot * vdotn};
}

// Field-level assembly over Sigma for a verified basic state; max_diff is the
// largest entry difference between the full and reduced forms.
struct BoundaryMatrixField {
  SurfaceGrid grid;
  std::vector<Matrix9> full;
  std::vector<Matrix9> reduced;
  double max_diff = 0.0;
};

BoundaryMatrixField boundary_matrix(const BasicState& bs, const Thresholds& thr,
                                    double tol = 1e-9);

// Pointwise evaluation of both sides of the quadratic-form identity for a
// Vdot field on Sigma (9 components, V-ordering).
struct QuadraticFormField {
  SurfaceField form;        // Atilde1 Vdot . Vdot
  SurfaceField reference;   // 2 qdot (vdot.N)
  double max_diff = 0.0;
};

QuadraticFormField quadratic_form(const BasicState& bs, const SurfaceField& dotV,
                                  const Thresholds& thr, double tol = 1e-9);

BoundaryPoint<double> boundary_point(const BasicState& bs, int i2, int i3);

}  // namespace cgl

#endif  // CGL_BOUNDARY_HPP_
