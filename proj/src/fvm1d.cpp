//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file fvm1d.cpp

#include "cgl/fvm1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgl/quasilinear.hpp"
#include "cgl/random.hpp"
#include "cgl/symmetrizer.hpp"

namespace cgl {

namespace {

std::array<double, 9> to_array(const ConservedState& c) { return c.flat(); }

PlasmaState cell_primitive(const std::array<double, 9>& w, int i) {
  try {
    return from_conserved(ConservedState::from_flat(w));
  } catch (const DomainError& e) {
    throw HyperbolicityLoss("fvm1d: cell " + std::to_string(i) +
                            " left the valid region: " + e.what());
  }
}

double cell_max_speed(const PlasmaState& u, int i) {
  if (!strictly_hyperbolic(u))
    throw HyperbolicityLoss("fvm1d: cell " + std::to_string(i) +
                            " is not hyperbolic");
  try {
    const auto s = char_speeds(u, Vec3::UnitX());
    return std::max(std::abs(s.front()), std::abs(s.back()));
  } catch (const NotPositiveDefinite&) {
    throw HyperbolicityLoss("fvm1d: cell " + std::to_string(i) +
                            " lost positive definiteness");
  }
}

}  // namespace

Grid1D make_grid1d(const std::vector<PlasmaState>& cells) {
  if (cells.empty()) throw DomainError("make_grid1d: no cells");
  Grid1D g;
  g.dx = 1.0 / static_cast<double>(cells.size());
  g.H1 = cells[0].H[0];
  g.w.reserve(cells.size());
  for (const PlasmaState& u : cells) {
    if (u.H[0] != g.H1)
      throw DomainError("make_grid1d: H1 must be uniform (div H = 0 in 1D)");
    g.w.push_back(to_array(to_conserved(u)));
  }
  return g;
}

PlasmaState primitive(const Grid1D& g, int i) {
  return cell_primitive(g.w[i], i);
}

std::array<double, 10> totals(const Grid1D& g) {
  std::array<double, 10> t{};
  for (int i = 0; i < g.n(); ++i) {
    for (int c = 0; c < 9; ++c) t[c] += g.w[i][c] * g.dx;
    t[9] += energy(primitive(g, i)).density * g.dx;
  }
  return t;
}

StepResult step(Grid1D& g, double cfl, double dt_cap) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("step: cfl must be in (0,1]");
  const int n = g.n();

  std::vector<PlasmaState> prim(n);
  std::vector<double> amax(n);
  double global = 0.0;
  for (int i = 0; i < n; ++i) {
    prim[i] = cell_primitive(g.w[i], i);
    amax[i] = cell_max_speed(prim[i], i);
    global = std::max(global, amax[i]);
  }
  if (global == 0.0) throw DomainError("step: zero wave speed");
  const double dt = std::min(cfl * g.dx / global, dt_cap);

  // Interface fluxes; fhat[i] sits between cells i and i+1 (periodic).
  std::vector<std::array<double, 9>> fhat(n);
  std::vector<Vector9> f(n);
  for (int i = 0; i < n; ++i) f[i] = flux(prim[i], 0);
  for (int i = 0; i < n; ++i) {
    const int r = (i + 1) % n;
    const double a = std::max(amax[i], amax[r]);
    for (int c = 0; c < 9; ++c)
      fhat[i][c] = 0.5 * (f[i][c] + f[r][c]) - 0.5 * a * (g.w[r][c] - g.w[i][c]);
  }
  const double lam = dt / g.dx;
  for (int i = 0; i < n; ++i) {
    const int l = (i + n - 1) % n;
    for (int c = 0; c < 9; ++c) g.w[i][c] -= lam * (fhat[i][c] - fhat[l][c]);
  }
  for (int i = 0; i < n; ++i) (void)cell_primitive(g.w[i], i);  // post validity
  return {dt, global};
}

RunResult run(Grid1D initial, double cfl, double T, int max_steps) {
  if (!(T >= 0.0)) throw DomainError("run: negative final time");
  RunResult out;
  out.grid = std::move(initial);
  out.diag.initial = totals(out.grid);
  out.diag.series.push_back({});
  out.diag.series.back()[0] = 0.0;
  for (int c = 0; c < 10; ++c)
    out.diag.series.back()[c + 1] = out.diag.initial[c];

  double t = 0.0;
  while (t < T && out.diag.steps < max_steps) {
    const StepResult s = step(out.grid, cfl, T - t);
    t += s.dt;
    ++out.diag.steps;
    out.diag.cfl_history.push_back(s.max_speed * s.dt / out.grid.dx);
    const auto tot = totals(out.grid);
    std::array<double, 11> row;
    row[0] = t;
    for (int c = 0; c < 10; ++c) {
      row[c + 1] = tot[c];
      out.diag.max_drift[c] = std::max(out.diag.max_drift[c],
                                       std::abs(tot[c] - out.diag.initial[c]));
    }
    out.diag.series.push_back(row);
    out.diag.final_totals = tot;
  }
  return out;
}

namespace {

// Periodic linear interpolation of the primitive state at position x.
PlasmaState interp_primitive(const Grid1D& g, const std::vector<PlasmaState>& prim,
                             double x) {
  const int n = g.n();
  double s = (x / g.dx) - 0.5;
  s -= std::floor(s / n) * n;
  const int i0 = static_cast<int>(std::floor(s)) % n;
  const int i1 = (i0 + 1) % n;
  const double w1 = s - std::floor(s);
  const double w0 = 1.0 - w1;
  const PlasmaState &a = prim[i0], &b = prim[i1];
  PlasmaState u;
  u.rho = w0 * a.rho + w1 * b.rho;
  u.v = w0 * a.v + w1 * b.v;
  u.H = w0 * a.H + w1 * b.H;
  u.p_par = w0 * a.p_par + w1 * b.p_par;
  u.p_perp = w0 * a.p_perp + w1 * b.p_perp;
  return u;
}

double mu1(const PlasmaState& u) {
  return u.p_par * u.H.squaredNorm() / (u.rho * u.rho * u.rho);
}
double mu2(const PlasmaState& u) { return u.p_perp / (u.rho * u.H.norm()); }

}  // namespace

AdiabaticDrift track_adiabatic(Grid1D g, double cfl, double T,
                               const std::vector<double>& positions) {
  const int np = static_cast<int>(positions.size());
  std::vector<double> x = positions;

  auto primitives = [&](const Grid1D& grid) {
    std::vector<PlasmaState> p(grid.n());
    for (int i = 0; i < grid.n(); ++i) p[i] = primitive(grid, i);
    return p;
  };

  std::vector<PlasmaState> prim = primitives(g);
  std::vector<double> m1(np), m2(np);
  AdiabaticDrift drift;
  drift.mu1.assign(np, 0.0);
  drift.mu2.assign(np, 0.0);
  for (int p = 0; p < np; ++p) {
    const PlasmaState u = interp_primitive(g, prim, x[p]);
    m1[p] = mu1(u);
    m2[p] = mu2(u);
  }

  double t = 0.0;
  while (t < T) {
    const std::vector<PlasmaState> prim_old = prim;
    const Grid1D g_old = g;
    const StepResult s = step(g, cfl, T - t);
    prim = primitives(g);
    for (int p = 0; p < np; ++p) {
      // RK2: predictor with the old field, corrector averaging old and new.
      const double v0 = interp_primitive(g_old, prim_old, x[p]).v[0];
      const double xs = x[p] + s.dt * v0;
      const double v1 = interp_primitive(g, prim, xs).v[0];
      x[p] += 0.5 * s.dt * (v0 + v1);
      x[p] -= std::floor(x[p]);
      const PlasmaState u = interp_primitive(g, prim, x[p]);
      drift.mu1[p] = std::max(drift.mu1[p], std::abs(mu1(u) - m1[p]) / std::abs(m1[p]));
      drift.mu2[p] = std::max(drift.mu2[p], std::abs(mu2(u) - m2[p]) / std::abs(m2[p]));
    }
    t += s.dt;
  }
  return drift;
}

}  // namespace cgl
