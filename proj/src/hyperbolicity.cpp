//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file hyperbolicity.cpp

#include "cgl/hyperbolicity.hpp"

#include <cmath>

namespace cgl {

namespace {

Condition make(double margin, double required) {
  return {margin, required, margin >= required};
}

}  // namespace

HyperbolicityReport certify(const PlasmaState& u, const Thresholds& thr) {
  thr.validate();
  const DerivedQuantities d = derive(u);
  const double h2 = u.H.squaredNorm();

  HyperbolicityReport r;
  // Strict form, margins measured against 0+.
  r.hypcond_rho = make(u.rho, 0.0);
  r.hypcond_rho.pass = u.rho > 0.0;
  r.hypcond_lower = make(d.tau + 1.0 / d.a_p, 0.0);
  r.hypcond_lower.pass = r.hypcond_lower.margin > 0.0;
  r.hypcond_upper = make(1.0 - d.tau, 0.0);
  r.hypcond_upper.pass = r.hypcond_upper.margin > 0.0;

  r.hyp_rho = make(u.rho, thr.delta[1]);
  r.hyp_tau = make((u.p_perp - u.p_par) / h2 + 1.0, thr.delta[2]);
  r.hyp_combo = make(u.p_par + u.p_perp * (u.p_par - u.p_perp) / h2, thr.delta[3]);
  r.hyp_lin = make(6.0 * u.p_par - u.p_perp, thr.delta[4]);
  r.pos_p_par = make(u.p_par, thr.delta[5]);
  r.pos_p_perp = make(u.p_perp, thr.delta[6]);
  r.pos_field = make(std::sqrt(h2), thr.delta[7]);

  r.firehose = d.tau > 1.0;
  r.mirror = d.a_p > 6.0 * (1.0 + 1.0 / d.beta_perp);
  r.symmetrizer_pd = d.tau < 1.0 && 6.0 * u.p_par > u.p_perp;
  return r;
}

bool hyp_equivalence(const PlasmaState& u) {
  const DerivedQuantities d = derive(u);
  const double h2 = u.H.squaredNorm();
  const bool state_form = u.rho > 0.0 && d.tau > -1.0 / d.a_p && d.tau < 1.0;
  const bool margin_form = u.rho > 0.0 &&
                           (u.p_perp - u.p_par) / h2 + 1.0 > 0.0 &&
                           u.p_par + u.p_perp * (u.p_par - u.p_perp) / h2 > 0.0;
  return state_form == margin_form;
}

bool remark2_implication(const PlasmaState& u) {
  const DerivedQuantities d = derive(u);
  const bool strict_hyp = u.rho > 0.0 && d.tau > -1.0 / d.a_p && d.tau < 1.0;
  if (!strict_hyp)
    throw PreconditionError("remark2: state is not strictly hyperbolic");
  if (!(d.beta_perp > 0.4))
    throw PreconditionError("remark2: beta_perp <= 2/5, outside the hypothesis");
  return d.a_p < 6.0;
}

}  // namespace cgl
