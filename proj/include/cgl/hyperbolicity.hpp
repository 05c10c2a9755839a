//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file hyperbolicity.hpp
//  \brief Hyperbolicity certificates and firehose/mirror regime classification.
//
//  Two equivalent formulations are carried side by side: the state-space form
//  {rho > 0, -1/a_p < tau < 1} and the margin form {rho >= d1,
//  (p_perp - p_par)/|H|^2 + 1 >= d2, p_par + p_perp(p_par - p_perp)/|H|^2 >= d3},
//  together with the extra symmetrizer requirement 6 p_par - p_perp >= d4.

#ifndef CGL_HYPERBOLICITY_HPP_
#define CGL_HYPERBOLICITY_HPP_

#include <array>

#include "cgl/state.hpp"

namespace cgl {

// Margins delta_0..delta_7. delta_0 is the non-collinearity floor used by the
// interface diagnostics; delta_1..delta_7 gate the certificate below.
struct Thresholds {
  std::array<double, 8> delta;

  Thresholds() { delta.fill(1e-8); }

  void validate() const {
    for (double d : delta)
      if (!(d > 0.0)) throw DomainError("thresholds: all margins must be positive");
  }
};

struct Condition {
  double margin = 0.0;     // evaluated left-hand side
  double required = 0.0;   // threshold it is compared against
  bool pass = false;       // margin >= required
};

struct HyperbolicityReport {
  // State-space form: rho > 0 and -1/a_p < tau < 1 (margins vs 0+).
  Condition hypcond_rho;
  Condition hypcond_lower;  // tau + 1/a_p
  Condition hypcond_upper;  // 1 - tau
  // Margin form, three conditions.
  Condition hyp_rho;        // rho >= d1
  Condition hyp_tau;        // (p_perp - p_par)/|H|^2 + 1 >= d2
  Condition hyp_combo;      // p_par + p_perp (p_par - p_perp)/|H|^2 >= d3
  // Symmetrizer weight condition.
  Condition hyp_lin;        // 6 p_par - p_perp >= d4
  // Default positivity requirements.
  Condition pos_p_par;      // p_par >= d5
  Condition pos_p_perp;     // p_perp >= d6
  Condition pos_field;      // |H| >= d7

  bool firehose = false;       // tau > 1
  bool mirror = false;         // a_p > 6 (1 + 1/beta_perp)
  bool symmetrizer_pd = false; // tau < 1 and 6 p_par > p_perp

  bool all_pass() const {
    return hypcond_rho.pass && hypcond_lower.pass && hypcond_upper.pass &&
           hyp_rho.pass && hyp_tau.pass && hyp_combo.pass && hyp_lin.pass &&
           pos_p_par.pass && pos_p_perp.pass && pos_field.pass;
  }
};

// Evaluate every condition; classification failures are data, not errors.
HyperbolicityReport certify(const PlasmaState& u, const Thresholds& thr);

// True iff the strict state-space form and the strict margin form agree.
// They always must: the second margin is 1 - tau and the third is
// p_par (1 + a_p tau), so this is an algebraic identity probed as a property.
bool hyp_equivalence(const PlasmaState& u);

// Checks the implication {strict hyperbolicity and beta_perp > 2/5} => a_p < 6.
// Throws PreconditionError outside the hypothesis set.
bool remark2_implication(const PlasmaState& u);

}  // namespace cgl

#endif  // CGL_HYPERBOLICITY_HPP_
