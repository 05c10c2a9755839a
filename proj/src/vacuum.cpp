//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file vacuum.cpp

#include "cgl/vacuum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>

namespace cgl {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Hyperbolic profiles cosh(kappa x1)/cosh(kappa) and sinh(kappa x1)/cosh(kappa)
// written with nonpositive exponents; x1 in [-1, 0].
double cosh_profile(double kappa, double x1) {
  return (std::exp(kappa * (x1 - 1.0)) + std::exp(-kappa * (x1 + 1.0))) /
         (1.0 + std::exp(-2.0 * kappa));
}

double sinh_profile(double kappa, double x1) {
  return (std::exp(kappa * (x1 - 1.0)) - std::exp(-kappa * (x1 + 1.0))) /
         (1.0 + std::exp(-2.0 * kappa));
}

// The four constant matrices of the div-curl system: rows are the three curl
// components followed by the divergence.
constexpr double kA1[4][3] = {{0, 0, 0}, {0, 0, -1}, {0, 1, 0}, {1, 0, 0}};
constexpr double kA2[4][3] = {{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
constexpr double kA3[4][3] = {{0, -1, 0}, {1, 0, 0}, {0, 0, 0}, {0, 0, 1}};

}  // namespace

void SurfaceCurrent::validate(double tol) const {
  for (const Mode& m : modes) {
    if (m.k2 == 0 && m.k3 == 0) {
      if (std::abs(m.c2.imag()) > tol || std::abs(m.c3.imag()) > tol)
        throw IncompatibleCurrent("surface current: mean mode must be real");
      continue;
    }
    const std::complex<double> compat =
        static_cast<double>(m.k2) * m.c2 + static_cast<double>(m.k3) * m.c3;
    const double scale = std::max({std::abs(m.c2), std::abs(m.c3), 1e-30});
    if (std::abs(compat) > tol * scale * std::hypot(m.k2, m.k3))
      throw IncompatibleCurrent(
          "surface current: mode violates k2 c2 + k3 c3 = 0");
  }
}

SurfaceField SurfaceCurrent::evaluate(const SurfaceGrid& grid) const {
  SurfaceField out(grid, 3);
  for (const Mode& m : modes) {
    const bool mean = (m.k2 == 0 && m.k3 == 0);
    for (int i3 = 0; i3 < grid.n3; ++i3)
      for (int i2 = 0; i2 < grid.n2; ++i2) {
        const double th = kTwoPi * (m.k2 * grid.x2(i2) + m.k3 * grid.x3(i3));
        const std::complex<double> ph(std::cos(th), std::sin(th));
        const double f2 = mean ? (m.c2 * ph).real() : 2.0 * (m.c2 * ph).real();
        const double f3 = mean ? (m.c3 * ph).real() : 2.0 * (m.c3 * ph).real();
        out.at(1, i2, i3) += f2;
        out.at(2, i2, i3) += f3;
      }
  }
  return out;
}

SurfaceCurrent SurfaceCurrent::from_grid(const SurfaceField& jc, int max_mode,
                                         double tol) {
  if (jc.comps != 3) throw GridMismatch("surface current: need 3 components");
  double c1 = 0.0, scale = 0.0;
  for (int i3 = 0; i3 < jc.grid.n3; ++i3)
    for (int i2 = 0; i2 < jc.grid.n2; ++i2) {
      c1 = std::max(c1, std::abs(jc.at(0, i2, i3)));
      scale = std::max({scale, std::abs(jc.at(1, i2, i3)),
                        std::abs(jc.at(2, i2, i3))});
    }
  if (c1 > tol * std::max(scale, 1e-30))
    throw IncompatibleCurrent("surface current: component 1 must vanish");

  SurfaceCurrent out;
  const int n2 = jc.grid.n2, n3 = jc.grid.n3;
  for (int k2 = 0; k2 <= max_mode; ++k2)
    for (int k3 = (k2 == 0 ? 0 : -max_mode); k3 <= max_mode; ++k3) {
      std::complex<double> a2(0, 0), a3(0, 0);
      for (int i3 = 0; i3 < n3; ++i3)
        for (int i2 = 0; i2 < n2; ++i2) {
          const double th =
              -kTwoPi * (k2 * jc.grid.x2(i2) + k3 * jc.grid.x3(i3));
          const std::complex<double> ph(std::cos(th), std::sin(th));
          a2 += jc.at(1, i2, i3) * ph;
          a3 += jc.at(2, i2, i3) * ph;
        }
      a2 /= static_cast<double>(n2) * n3;
      a3 /= static_cast<double>(n2) * n3;
      if (std::abs(a2) + std::abs(a3) > 1e-14 * std::max(scale, 1e-30))
        out.modes.push_back({k2, k3, a2, a3});
    }
  return out;
}

SurfaceField VacuumField::trace_sigma() const {
  SurfaceGrid sg{h.grid.n2, h.grid.n3};
  SurfaceField t(sg, 3);
  t.fill([&](int c, int i2, int i3) { return h.at(c, h.grid.n1 - 1, i2, i3); });
  return t;
}

SurfaceField VacuumField::trace_sigma_minus() const {
  SurfaceGrid sg{h.grid.n2, h.grid.n3};
  SurfaceField t(sg, 3);
  t.fill([&](int c, int i2, int i3) { return h.at(c, 0, i2, i3); });
  return t;
}

VacuumField solve_flat(const SurfaceCurrent& jc, int max_mode,
                       const SlabGrid& grid) {
  jc.validate();
  for (const auto& m : jc.modes)
    if (std::abs(m.k2) > max_mode || std::abs(m.k3) > max_mode)
      throw IncompatibleCurrent("solve_flat: mode beyond requested truncation");
  if (grid.x1min != -1.0 || grid.x1max != 0.0)
    throw GridMismatch("solve_flat: expected the vacuum slab (-1,0)");

  VacuumField out;
  out.h = SlabField(grid, 3);
  VacuumResiduals& res = out.residuals;

  for (const auto& m : jc.modes) {
    if (m.k2 == 0 && m.k3 == 0) {
      // Constant solution h = (0, -jc3, jc2); curl and div vanish identically.
      for (int i3 = 0; i3 < grid.n3; ++i3)
        for (int i2 = 0; i2 < grid.n2; ++i2)
          for (int i1 = 0; i1 < grid.n1; ++i1) {
            out.h.at(1, i1, i2, i3) += -m.c3.real();
            out.h.at(2, i1, i2, i3) += m.c2.real();
          }
      continue;
    }

    const double k2 = m.k2, k3 = m.k3;
    const double kk = k2 * k2 + k3 * k3;
    const double kappa = kTwoPi * std::sqrt(kk);
    // 2 pi i xi(-1) =: X solves the two tangential trace equations jointly;
    // exact under the compatibility condition.
    const std::complex<double> X = (k3 * m.c2 - k2 * m.c3) / kk;
    const std::complex<double> i_unit(0.0, 1.0);

    for (int i1 = 0; i1 < grid.n1; ++i1) {
      const double x1 = grid.x1(i1);
      const double cp = cosh_profile(kappa, x1);
      const double sp = sinh_profile(kappa, x1);
      // h1 = xi', hj = 2 pi i kj xi with xi = X cosh(kappa x1)/(2 pi i cosh kappa)
      const std::complex<double> h1 = X * kappa * sp / (kTwoPi * i_unit);
      const std::complex<double> h2 = k2 * X * cp;
      const std::complex<double> h3 = k3 * X * cp;
      for (int i3 = 0; i3 < grid.n3; ++i3)
        for (int i2 = 0; i2 < grid.n2; ++i2) {
          const double th = kTwoPi * (k2 * grid.x2(i2) + k3 * grid.x3(i3));
          const std::complex<double> ph(std::cos(th), std::sin(th));
          out.h.at(0, i1, i2, i3) += 2.0 * (h1 * ph).real();
          out.h.at(1, i1, i2, i3) += 2.0 * (h2 * ph).real();
          out.h.at(2, i1, i2, i3) += 2.0 * (h3 * ph).real();
        }

      // Analytic equation residuals for this mode at this depth. Each term is
      // evaluated independently so cancellation is measured, not assumed.
      const std::complex<double> d1h1 = X * kappa * kappa * cp / (kTwoPi * i_unit);
      const std::complex<double> d1h2 = k2 * X * kappa * sp;
      const std::complex<double> d1h3 = k3 * X * kappa * sp;
      const std::complex<double> curl1 =
          i_unit * kTwoPi * (k2 * h3 - k3 * h2);
      const std::complex<double> curl2 = i_unit * kTwoPi * k3 * h1 - d1h3;
      const std::complex<double> curl3 = d1h2 - i_unit * kTwoPi * k2 * h1;
      const std::complex<double> div =
          d1h1 + i_unit * kTwoPi * (k2 * h2 + k3 * h3);
      res.curl = std::max({res.curl, 2.0 * std::abs(curl1),
                           2.0 * std::abs(curl2), 2.0 * std::abs(curl3)});
      res.div = std::max(res.div, 2.0 * std::abs(div));
    }

    // Boundary rows: h1(0) = 0 and (h3, -h2)(-1) = (c2, c3).
    res.bc_sigma = std::max(
        res.bc_sigma,
        2.0 * std::abs(X * kappa * sinh_profile(kappa, 0.0) / (kTwoPi * i_unit)));
    const double cpm = cosh_profile(kappa, -1.0);
    res.bc_sigma_minus =
        std::max({res.bc_sigma_minus, 2.0 * std::abs(k3 * X * cpm - m.c2),
                  2.0 * std::abs(-k2 * X * cpm - m.c3)});
  }
  res.scale = out.h.max_abs();
  return out;
}

namespace {

struct Stencil {
  int node[3];  // i1 offsets resolved by caller
  double w[3];
  int count;
};

// Second-order d/dx1 stencil at node i1 of n1 nodes, spacing d.
Stencil d1_stencil(int i1, int n1, double d) {
  if (i1 == 0) return {{0, 1, 2}, {-1.5 / d, 2.0 / d, -0.5 / d}, 3};
  if (i1 == n1 - 1)
    return {{n1 - 1, n1 - 2, n1 - 3}, {1.5 / d, -2.0 / d, 0.5 / d}, 3};
  return {{i1 - 1, i1 + 1, 0}, {-0.5 / d, 0.5 / d, 0.0}, 2};
}

}  // namespace

VacuumField solve_div_curl_ls(const InterfaceGeometry& g, const SlabGrid& grid,
                              const SurfaceField& bc_sigma,
                              const SurfaceField& bc_minus,
                              const CurvedSolveOptions& opts,
                              CurvedSolveInfo* info) {
  if (grid.x1min != -1.0 || grid.x1max != 0.0)
    throw GridMismatch("solve_div_curl_ls: expected the vacuum slab (-1,0)");
  if (g.grid.n2 != grid.n2 || g.grid.n3 != grid.n3)
    throw GridMismatch("solve_div_curl_ls: geometry grid mismatch");
  if (bc_sigma.comps != 1 || bc_minus.comps != 2)
    throw GridMismatch("solve_div_curl_ls: boundary data components");

  const int n1 = grid.n1, n2 = grid.n2, n3 = grid.n3;
  const auto npts = static_cast<Eigen::Index>(grid.points());
  const Eigen::Index ncols = 3 * npts;
  const Eigen::Index nrows = 4 * npts + 3 * static_cast<Eigen::Index>(n2) * n3;

  auto uidx = [&](int c, int i1, int i2, int i3) -> Eigen::Index {
    return ((static_cast<Eigen::Index>(c) * n3 + i3) * n2 + i2) * n1 + i1;
  };

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(nrows) * 8);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nrows);

  const double d1 = grid.d1(), d2 = grid.d2(), d3 = grid.d3();
  const double wb = opts.boundary_weight / std::sqrt(d1);

  Eigen::Index row = 0;
  for (int i3 = 0; i3 < n3; ++i3)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int i1 = 0; i1 < n1; ++i1) {
        const double x1 = grid.x1(i1);
        const double dphi1 = g.d1Phi(x1, i2, i3);
        const double p2 = g.djPhi(1, x1, i2, i3);
        const double p3 = g.djPhi(2, x1, i2, i3);
        const Stencil s1 = d1_stencil(i1, n1, d1);
        const int i2p = (i2 + 1) % n2, i2m = (i2 + n2 - 1) % n2;
        const int i3p = (i3 + 1) % n3, i3m = (i3 + n3 - 1) % n3;

        for (int r = 0; r < 4; ++r, ++row) {
          for (int c = 0; c < 3; ++c) {
            // Atilde1 = (A1 - p2 A2 - p3 A3)/d1Phi acting through the d1 stencil
            const double a1t = (kA1[r][c] - p2 * kA2[r][c] - p3 * kA3[r][c]) / dphi1;
            if (a1t != 0.0)
              for (int q = 0; q < s1.count; ++q)
                trip.emplace_back(row, uidx(c, s1.node[q], i2, i3),
                                  a1t * s1.w[q]);
            if (kA2[r][c] != 0.0) {
              trip.emplace_back(row, uidx(c, i1, i2p, i3),
                                kA2[r][c] * 0.5 / d2);
              trip.emplace_back(row, uidx(c, i1, i2m, i3),
                                -kA2[r][c] * 0.5 / d2);
            }
            if (kA3[r][c] != 0.0) {
              trip.emplace_back(row, uidx(c, i1, i2, i3p),
                                kA3[r][c] * 0.5 / d3);
              trip.emplace_back(row, uidx(c, i1, i2, i3m),
                                -kA3[r][c] * 0.5 / d3);
            }
          }
        }
      }

  // Boundary rows. Sigma is the top wall (x1 = 0, i1 = n1-1): h.N = bc_sigma.
  for (int i3 = 0; i3 < n3; ++i3)
    for (int i2 = 0; i2 < n2; ++i2, ++row) {
      trip.emplace_back(row, uidx(0, n1 - 1, i2, i3), wb);
      trip.emplace_back(row, uidx(1, n1 - 1, i2, i3),
                        wb * g.normal.at(1, i2, i3));
      trip.emplace_back(row, uidx(2, n1 - 1, i2, i3),
                        wb * g.normal.at(2, i2, i3));
      rhs[row] = wb * bc_sigma.at(0, i2, i3);
    }
  // Sigma^- (x1 = -1, i1 = 0): h3 = bc(0), -h2 = bc(1).
  for (int i3 = 0; i3 < n3; ++i3)
    for (int i2 = 0; i2 < n2; ++i2) {
      trip.emplace_back(row, uidx(2, 0, i2, i3), wb);
      rhs[row] = wb * bc_minus.at(0, i2, i3);
      ++row;
      trip.emplace_back(row, uidx(1, 0, i2, i3), -wb);
      rhs[row] = wb * bc_minus.at(1, i2, i3);
      ++row;
    }

  Eigen::SparseMatrix<double> A(nrows, ncols);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();

  VacuumField out;
  out.h = SlabField(grid, 3);
  CurvedSolveInfo local;

  const double rhs_norm = rhs.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ncols);
  if (rhs_norm > 0.0) {
    Eigen::LeastSquaresConjugateGradient<Eigen::SparseMatrix<double>> lscg;
    lscg.setTolerance(opts.cg_tolerance);
    lscg.setMaxIterations(opts.max_iterations);
    lscg.compute(A);
    x = lscg.solve(rhs);
    local.iterations = static_cast<int>(lscg.iterations());
    local.ls_residual = (A * x - rhs).norm() / rhs_norm;
    if (!(local.ls_residual < opts.failure_threshold))
      throw SolverFailure("solve_div_curl_ls: least-squares residual too large");
  }
  if (info) *info = local;

  for (int c = 0; c < 3; ++c)
    for (int i3 = 0; i3 < n3; ++i3)
      for (int i2 = 0; i2 < n2; ++i2)
        for (int i1 = 0; i1 < n1; ++i1)
          out.h.at(c, i1, i2, i3) = x[uidx(c, i1, i2, i3)];

  // Equation residuals of the discrete solution, reported unweighted.
  const Eigen::VectorXd r = A * x - rhs;
  VacuumResiduals& res = out.residuals;
  row = 0;
  for (Eigen::Index p = 0; p < npts; ++p) {
    res.curl = std::max({res.curl, std::abs(r[row]), std::abs(r[row + 1]),
                         std::abs(r[row + 2])});
    res.div = std::max(res.div, std::abs(r[row + 3]));
    row += 4;
  }
  for (int i = 0; i < n2 * n3; ++i, ++row)
    res.bc_sigma = std::max(res.bc_sigma, std::abs(r[row]) / wb);
  for (int i = 0; i < 2 * n2 * n3; ++i, ++row)
    res.bc_sigma_minus = std::max(res.bc_sigma_minus, std::abs(r[row]) / wb);
  res.scale = out.h.max_abs();
  return out;
}

VacuumField solve_curved(const InterfaceGeometry& g, const SurfaceCurrent& jc,
                         const SlabGrid& grid, const CurvedSolveOptions& opts,
                         CurvedSolveInfo* info) {
  jc.validate();
  const SurfaceGrid sg{grid.n2, grid.n3};
  const SurfaceField jgrid = jc.evaluate(sg);
  SurfaceField bc_sigma(sg, 1);
  SurfaceField bc_minus(sg, 2);
  bc_minus.fill([&](int c, int i2, int i3) {
    return c == 0 ? jgrid.at(1, i2, i3) : jgrid.at(2, i2, i3);
  });
  return solve_div_curl_ls(g, grid, bc_sigma, bc_minus, opts, info);
}

NonCollinearity non_collinearity(const SurfaceField& Htrace,
                                 const SurfaceField& htrace) {
  require_same_grid(Htrace, htrace, "non_collinearity");
  if (Htrace.comps != 3 || htrace.comps != 3)
    throw GridMismatch("non_collinearity: traces need 3 components");

  NonCollinearity out;
  out.min_cross = std::numeric_limits<double>::infinity();
  for (int i3 = 0; i3 < Htrace.grid.n3; ++i3)
    for (int i2 = 0; i2 < Htrace.grid.n2; ++i2) {
      const Vec3 H(Htrace.at(0, i2, i3), Htrace.at(1, i2, i3),
                   Htrace.at(2, i2, i3));
      const Vec3 h(htrace.at(0, i2, i3), htrace.at(1, i2, i3),
                   htrace.at(2, i2, i3));
      const double c = H.cross(h).norm();
      if (c < out.min_cross) {
        out.min_cross = c;
        out.i2 = i2;
        out.i3 = i3;
      }
    }
  return out;
}

RtSignResult rt_sign(const SlabField& qfield, const VacuumField& h,
                     const InterfaceGeometry& g) {
  if (qfield.comps != 1) throw GridMismatch("rt_sign: q must be scalar");
  if (qfield.grid.n2 != h.h.grid.n2 || qfield.grid.n3 != h.h.grid.n3 ||
      qfield.grid.n2 != g.grid.n2 || qfield.grid.n3 != g.grid.n3)
    throw GridMismatch("rt_sign: tangential grids differ");
  if (qfield.grid.x1min != 0.0) throw GridMismatch("rt_sign: q not on (0,1)");

  // |h|^2/2 on the vacuum slab.
  SlabField hh(h.h.grid, 1);
  hh.fill([&](int, int i1, int i2, int i3) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += h.h.at(c, i1, i2, i3) * h.h.at(c, i1, i2, i3);
    return 0.5 * s;
  });

  const SlabField gq1 = dphi_apply(g, qfield, DPhi::d1);
  const SlabField gq2 = dphi_apply(g, qfield, DPhi::d2);
  const SlabField gq3 = dphi_apply(g, qfield, DPhi::d3);
  const SlabField gh1 = dphi_apply(g, hh, DPhi::d1);
  const SlabField gh2 = dphi_apply(g, hh, DPhi::d2);
  const SlabField gh3 = dphi_apply(g, hh, DPhi::d3);

  RtSignResult out;
  out.values = SurfaceField(SurfaceGrid{qfield.grid.n2, qfield.grid.n3}, 1);
  out.max_value = -std::numeric_limits<double>::infinity();
  const int top = h.h.grid.n1 - 1;  // Sigma side of the vacuum slab
  for (int i3 = 0; i3 < qfield.grid.n3; ++i3)
    for (int i2 = 0; i2 < qfield.grid.n2; ++i2) {
      const Vec3 N(1.0, g.normal.at(1, i2, i3), g.normal.at(2, i2, i3));
      const Vec3 n = -N / N.norm();
      const Vec3 grad_q(gq1.at(0, 0, i2, i3), gq2.at(0, 0, i2, i3),
                        gq3.at(0, 0, i2, i3));
      const Vec3 grad_h(gh1.at(0, top, i2, i3), gh2.at(0, top, i2, i3),
                        gh3.at(0, top, i2, i3));
      const double val = n.dot(grad_q - grad_h);
      out.values.at(0, i2, i3) = val;
      out.max_value = std::max(out.max_value, val);
    }
  return out;
}

}  // namespace cgl
