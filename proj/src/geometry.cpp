//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file geometry.cpp

#include "cgl/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cgl/quasilinear.hpp"

namespace cgl {

namespace {

double eval_poly(const std::array<double, 6>& c, double u) {
  double r = 0.0;
  for (int k = 5; k >= 0; --k) r = r * u + c[k];
  return r;
}

double eval_poly_deriv(const std::array<double, 6>& c, double u) {
  double r = 0.0;
  for (int k = 5; k >= 1; --k) r = r * u + k * c[k];
  return r;
}

// Max |p'| over a piece: endpoints plus real roots of p'' (degree <= 3 here,
// so p'' is at most quadratic).
double piece_deriv_max(const CutOff::Piece& p) {
  const double len = p.hi - p.lo;
  std::vector<double> us = {0.0, len};
  // p''(u) = sum_{k>=2} k (k-1) c[k] u^{k-2}; quadratic for quartic pieces.
  const double a = 12.0 * p.c[4];  // u^2 (quintic term unused by construction)
  const double b = 6.0 * p.c[3];
  const double c = 2.0 * p.c[2];
  if (a != 0.0) {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      us.push_back((-b + sq) / (2.0 * a));
      us.push_back((-b - sq) / (2.0 * a));
    }
  } else if (b != 0.0) {
    us.push_back(-c / b);
  }
  double best = 0.0;
  for (double u : us)
    if (u >= 0.0 && u <= len)
      best = std::max(best, std::abs(eval_poly_deriv(p.c, u)));
  return best;
}

}  // namespace

double CutOff::operator()(double x) const {
  const double ax = std::abs(x);
  if (ax >= support_) return 0.0;
  for (const Piece& p : pieces_)
    if (ax <= p.hi) return eval_poly(p.c, ax - p.lo);
  return 0.0;
}

double CutOff::deriv(double x) const {
  const double ax = std::abs(x);
  if (ax >= support_) return 0.0;
  for (const Piece& p : pieces_)
    if (ax <= p.hi) {
      const double d = eval_poly_deriv(p.c, ax - p.lo);
      return x < 0.0 ? -d : d;
    }
  return 0.0;
}

CutOff build_cutoff(double phi0_sup) {
  if (!(phi0_sup >= 0.0 && phi0_sup < 1.0))
    throw DomainError("build_cutoff: phi0_sup must lie in [0, 1)");

  const double bound = 4.0 / (phi0_sup + 3.0);
  // The transition must drop chi by 1 over a run inside (plateau, support),
  // so its mean slope exceeds 1/(support - plateau); geometry shrinks the
  // plateau and pushes the support outward as the bound tightens toward 1.
  const double slack = (1.0 - phi0_sup) / 4.0;  // = 1 - 1/bound
  const double w_p = slack / 8.0;
  const double w_s = 1.0 - slack / 8.0;
  const double run = w_s - w_p;
  const double r = slack / 8.0;   // ramp fraction of the run
  const double ell = r * run;
  const double s = 1.0 / (run - ell);  // peak slope; drop = s (run - ell) = 1

  CutOff chi;
  chi.plateau_ = w_p;
  chi.support_ = w_s;
  // chi = 1 on the plateau.
  chi.pieces_.push_back({0.0, w_p, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0}});
  // Ramp from slope 0 to -s: chi = 1 - (s/l^2) u^3 + (s/(2 l^3)) u^4.
  chi.pieces_.push_back(
      {w_p, w_p + ell,
       {1.0, 0.0, 0.0, -s / (ell * ell), s / (2.0 * ell * ell * ell), 0.0}});
  // Constant slope -s.
  chi.pieces_.push_back(
      {w_p + ell, w_s - ell, {1.0 - 0.5 * s * ell, -s, 0.0, 0.0, 0.0, 0.0}});
  // Ramp back to slope 0, ending at exactly 0.
  chi.pieces_.push_back(
      {w_s - ell, w_s,
       {0.5 * s * ell, -s, 0.0, s / (ell * ell), -s / (2.0 * ell * ell * ell),
        0.0}});
  chi.pieces_.push_back({w_s, 1.0, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0}});

  double m = 0.0;
  for (const auto& p : chi.pieces_) m = std::max(m, piece_deriv_max(p));
  chi.deriv_bound_ = m;
  if (!(m < bound))
    throw Error("build_cutoff: constructed derivative bound not met");
  return chi;
}

InterfaceGeometry lift(const SurfaceField& phi, const CutOff& chi) {
  SurfaceField zero(phi.grid, 1);
  return lift(phi, zero, chi);
}

InterfaceGeometry lift(const SurfaceField& phi, const SurfaceField& phi_t,
                       const CutOff& chi) {
  if (phi.comps != 1) throw GridMismatch("lift: phi must be scalar");
  require_same_grid(phi, phi_t, "lift");
  const double sup = phi.max_abs();
  if (!(sup < 1.0)) throw DomainError("lift: ||phi|| must be < 1");

  InterfaceGeometry g;
  g.grid = phi.grid;
  g.phi = phi;
  g.phi_t = phi_t;
  g.chi = chi;
  g.dphi2 = SurfaceField(phi.grid, 1);
  g.dphi3 = SurfaceField(phi.grid, 1);
  g.dphi2.fill([&](int, int i2, int i3) { return phi.dx(1, 0, i2, i3); });
  g.dphi3.fill([&](int, int i2, int i3) { return phi.dx(2, 0, i2, i3); });
  g.normal = SurfaceField(phi.grid, 3);
  g.normal.fill([&](int c, int i2, int i3) {
    if (c == 0) return 1.0;
    return c == 1 ? -g.dphi2.at(0, i2, i3) : -g.dphi3.at(0, i2, i3);
  });
  g.d1Phi_min = 1.0 - chi.deriv_bound() * sup;
  if (g.d1Phi_min <= 1e-6)
    throw DegenerateLift("lift: d1 Phi lower bound degenerate");
  return g;
}

SlabField plain_derivative(const SlabField& f, int axis) {
  const SlabGrid& gr = f.grid;
  SlabField out(gr, f.comps);
  if (axis == 0) {
    const double d = gr.d1();
    out.fill([&](int c, int i1, int i2, int i3) {
      if (i1 == 0)
        return (-3.0 * f.at(c, 0, i2, i3) + 4.0 * f.at(c, 1, i2, i3) -
                f.at(c, 2, i2, i3)) / (2.0 * d);
      if (i1 == gr.n1 - 1)
        return (3.0 * f.at(c, i1, i2, i3) - 4.0 * f.at(c, i1 - 1, i2, i3) +
                f.at(c, i1 - 2, i2, i3)) / (2.0 * d);
      return (f.at(c, i1 + 1, i2, i3) - f.at(c, i1 - 1, i2, i3)) / (2.0 * d);
    });
  } else if (axis == 1) {
    const double d = gr.d2();
    out.fill([&](int c, int i1, int i2, int i3) {
      const int p = (i2 + 1) % gr.n2, m = (i2 + gr.n2 - 1) % gr.n2;
      return (f.at(c, i1, p, i3) - f.at(c, i1, m, i3)) / (2.0 * d);
    });
  } else {
    const double d = gr.d3();
    out.fill([&](int c, int i1, int i2, int i3) {
      const int p = (i3 + 1) % gr.n3, m = (i3 + gr.n3 - 1) % gr.n3;
      return (f.at(c, i1, i2, p) - f.at(c, i1, i2, m)) / (2.0 * d);
    });
  }
  return out;
}

namespace {

void require_surface_match(const InterfaceGeometry& g, const SlabField& f,
                           const char* where) {
  if (g.grid.n2 != f.grid.n2 || g.grid.n3 != f.grid.n3)
    throw GridMismatch(std::string(where) + ": surface grid does not match slab");
}

}  // namespace

SlabField dphi_apply(const InterfaceGeometry& g, const SlabField& f, DPhi which) {
  require_surface_match(g, f, "dphi_apply");
  const SlabField d1f = plain_derivative(f, 0);
  SlabField out(f.grid, f.comps);

  switch (which) {
    case DPhi::d1:
      out.fill([&](int c, int i1, int i2, int i3) {
        return d1f.at(c, i1, i2, i3) / g.d1Phi(f.grid.x1(i1), i2, i3);
      });
      break;
    case DPhi::d2:
    case DPhi::d3: {
      const int axis = which == DPhi::d2 ? 1 : 2;
      const SlabField djf = plain_derivative(f, axis);
      out.fill([&](int c, int i1, int i2, int i3) {
        const double x1 = f.grid.x1(i1);
        return djf.at(c, i1, i2, i3) -
               g.djPhi(axis, x1, i2, i3) / g.d1Phi(x1, i2, i3) *
                   d1f.at(c, i1, i2, i3);
      });
      break;
    }
    case DPhi::t:
      out.fill([&](int c, int i1, int i2, int i3) {
        const double x1 = f.grid.x1(i1);
        return -g.dtPhi(x1, i2, i3) / g.d1Phi(x1, i2, i3) *
               d1f.at(c, i1, i2, i3);
      });
      break;
  }
  return out;
}

ConstraintResiduals constraint_residuals(const SlabField& H,
                                         const InterfaceGeometry& g) {
  if (H.comps != 3) throw GridMismatch("constraint_residuals: H needs 3 comps");
  require_surface_match(g, H, "constraint_residuals");

  const SlabField d1 = dphi_apply(g, H, DPhi::d1);
  const SlabField d2 = dphi_apply(g, H, DPhi::d2);
  const SlabField d3 = dphi_apply(g, H, DPhi::d3);

  ConstraintResiduals r{0.0, 0.0, 0.0};
  const SlabGrid& gr = H.grid;
  for (int i3 = 0; i3 < gr.n3; ++i3)
    for (int i2 = 0; i2 < gr.n2; ++i2) {
      for (int i1 = 0; i1 < gr.n1; ++i1) {
        const double div = d1.at(0, i1, i2, i3) + d2.at(1, i1, i2, i3) +
                           d3.at(2, i1, i2, i3);
        r.interior_div = std::max(r.interior_div, std::abs(div));
      }
      const double hn = H.at(0, 0, i2, i3) +
                        g.normal.at(1, i2, i3) * H.at(1, 0, i2, i3) +
                        g.normal.at(2, i2, i3) * H.at(2, 0, i2, i3);
      r.sigma_normal = std::max(r.sigma_normal, std::abs(hn));
      r.sigma_plus_h1 =
          std::max(r.sigma_plus_h1, std::abs(H.at(0, gr.n1 - 1, i2, i3)));
    }
  return r;
}

SlabField good_unknown(const SlabField& U, const SurfaceField& psi,
                       const InterfaceGeometry& g0, const SlabField& U0) {
  require_same_grid(U, U0, "good_unknown");
  require_surface_match(g0, U, "good_unknown");
  if (psi.grid.n2 != U.grid.n2 || psi.grid.n3 != U.grid.n3)
    throw GridMismatch("good_unknown: psi grid mismatch");

  const SlabField d1U0 = plain_derivative(U0, 0);
  SlabField out(U.grid, U.comps);
  out.fill([&](int c, int i1, int i2, int i3) {
    const double x1 = U.grid.x1(i1);
    const double cap = g0.chi(x1) * psi.at(0, i2, i3);
    const double d1phi = g0.d1Phi(x1, i2, i3);
    if (d1phi <= 1e-6)
      throw DegenerateLift("good_unknown: d1 Phi degenerate at a node");
    return U.at(c, i1, i2, i3) - cap / d1phi * d1U0.at(c, i1, i2, i3);
  });
  return out;
}

SlabField apply_plasma_operator(const InterfaceGeometry& g, const SlabField& U) {
  if (U.comps != 9) throw GridMismatch("apply_plasma_operator: need 9 comps");
  require_surface_match(g, U, "apply_plasma_operator");

  const SlabField d1U = plain_derivative(U, 0);
  const SlabField d2U = plain_derivative(U, 1);
  const SlabField d3U = plain_derivative(U, 2);

  SlabField out(U.grid, 9);
  const SlabGrid& gr = U.grid;
  for (int i3 = 0; i3 < gr.n3; ++i3)
    for (int i2 = 0; i2 < gr.n2; ++i2)
      for (int i1 = 0; i1 < gr.n1; ++i1) {
        PlasmaState u;
        u.rho = U.at(kRho, i1, i2, i3);
        u.v = Vec3(U.at(kV, i1, i2, i3), U.at(kV + 1, i1, i2, i3),
                   U.at(kV + 2, i1, i2, i3));
        u.H = Vec3(U.at(kH, i1, i2, i3), U.at(kH + 1, i1, i2, i3),
                   U.at(kH + 2, i1, i2, i3));
        u.p_par = U.at(kPpar, i1, i2, i3);
        u.p_perp = U.at(kPperp, i1, i2, i3);

        const Matrix9 B1 = assemble_B(u, 0);
        const Matrix9 B2 = assemble_B(u, 1);
        const Matrix9 B3 = assemble_B(u, 2);

        const double x1 = gr.x1(i1);
        const double d1phi = g.d1Phi(x1, i2, i3);
        const double p2 = g.djPhi(1, x1, i2, i3);
        const double p3 = g.djPhi(2, x1, i2, i3);
        const double pt = g.dtPhi(x1, i2, i3);

        Vector9 g1, g2, g3;
        for (int c = 0; c < 9; ++c) {
          g1[c] = d1U.at(c, i1, i2, i3);
          g2[c] = d2U.at(c, i1, i2, i3);
          g3[c] = d3U.at(c, i1, i2, i3);
        }
        const Vector9 res =
            (B1 * g1 - pt * g1 - p2 * (B2 * g1) - p3 * (B3 * g1)) / d1phi +
            B2 * g2 + B3 * g3;
        for (int c = 0; c < 9; ++c) out.at(c, i1, i2, i3) = res[c];
      }
  return out;
}

}  // namespace cgl
