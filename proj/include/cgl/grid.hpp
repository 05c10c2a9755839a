//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file grid.hpp
//  \brief Slab and surface grids. The slab is (x1min,x1max) x T^2 with x1
//         nodes including both walls and periodic x2, x3. Data is stored
//         component-major, x1-fastest within a component.

#ifndef CGL_GRID_HPP_
#define CGL_GRID_HPP_

#include <cstddef>
#include <vector>

#include "cgl/errors.hpp"

namespace cgl {

struct SlabGrid {
  int n1 = 0, n2 = 0, n3 = 0;
  double x1min = 0.0, x1max = 1.0;

  static SlabGrid plasma(int n1, int n2, int n3) { return {n1, n2, n3, 0.0, 1.0}; }
  static SlabGrid vacuum(int n1, int n2, int n3) { return {n1, n2, n3, -1.0, 0.0}; }

  double d1() const { return (x1max - x1min) / (n1 - 1); }
  double d2() const { return 1.0 / n2; }
  double d3() const { return 1.0 / n3; }
  double x1(int i) const { return x1min + i * d1(); }
  double x2(int i) const { return i * d2(); }
  double x3(int i) const { return i * d3(); }
  std::size_t points() const {
    return static_cast<std::size_t>(n1) * n2 * n3;
  }
  bool operator==(const SlabGrid&) const = default;
};

struct SlabField {
  SlabGrid grid;
  int comps = 1;
  std::vector<double> data;

  SlabField() = default;
  SlabField(const SlabGrid& g, int c)
      : grid(g), comps(c), data(g.points() * c, 0.0) {}

  std::size_t index(int c, int i1, int i2, int i3) const {
    return ((static_cast<std::size_t>(c) * grid.n3 + i3) * grid.n2 + i2) *
               grid.n1 + i1;
  }
  double& at(int c, int i1, int i2, int i3) { return data[index(c, i1, i2, i3)]; }
  double at(int c, int i1, int i2, int i3) const {
    return data[index(c, i1, i2, i3)];
  }

  template <class F>  // f(c, i1, i2, i3) -> double
  void fill(F&& f) {
    for (int c = 0; c < comps; ++c)
      for (int i3 = 0; i3 < grid.n3; ++i3)
        for (int i2 = 0; i2 < grid.n2; ++i2)
          for (int i1 = 0; i1 < grid.n1; ++i1)
            at(c, i1, i2, i3) = f(c, i1, i2, i3);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data) m = std::max(m, std::abs(x));
    return m;
  }
};

inline void require_same_grid(const SlabField& a, const SlabField& b,
                              const char* where) {
  if (!(a.grid == b.grid))
    throw GridMismatch(std::string(where) + ": slab grids differ");
}

// Periodic n2 x n3 grid on T^2 (a time slice of the interface or a trace).
struct SurfaceGrid {
  int n2 = 0, n3 = 0;
  double d2() const { return 1.0 / n2; }
  double d3() const { return 1.0 / n3; }
  double x2(int i) const { return i * d2(); }
  double x3(int i) const { return i * d3(); }
  bool operator==(const SurfaceGrid&) const = default;
};

struct SurfaceField {
  SurfaceGrid grid;
  int comps = 1;
  std::vector<double> data;

  SurfaceField() = default;
  SurfaceField(const SurfaceGrid& g, int c)
      : grid(g), comps(c),
        data(static_cast<std::size_t>(g.n2) * g.n3 * c, 0.0) {}

  std::size_t index(int c, int i2, int i3) const {
    return (static_cast<std::size_t>(c) * grid.n3 + i3) * grid.n2 + i2;
  }
  double& at(int c, int i2, int i3) { return data[index(c, i2, i3)]; }
  double at(int c, int i2, int i3) const { return data[index(c, i2, i3)]; }

  template <class F>  // f(c, i2, i3) -> double
  void fill(F&& f) {
    for (int c = 0; c < comps; ++c)
      for (int i3 = 0; i3 < grid.n3; ++i3)
        for (int i2 = 0; i2 < grid.n2; ++i2) at(c, i2, i3) = f(c, i2, i3);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data) m = std::max(m, std::abs(x));
    return m;
  }

  // Periodic second-order central difference along x2 or x3.
  double dx(int axis, int c, int i2, int i3) const {
    if (axis == 1) {
      const int p = (i2 + 1) % grid.n2, m = (i2 + grid.n2 - 1) % grid.n2;
      return (at(c, p, i3) - at(c, m, i3)) / (2.0 * grid.d2());
    }
    const int p = (i3 + 1) % grid.n3, m = (i3 + grid.n3 - 1) % grid.n3;
    return (at(c, i2, p) - at(c, i2, m)) / (2.0 * grid.d3());
  }
};

inline void require_same_grid(const SurfaceField& a, const SurfaceField& b,
                              const char* where) {
  if (!(a.grid == b.grid))
    throw GridMismatch(std::string(where) + ": surface grids differ");
}

}  // namespace cgl

#endif  // CGL_GRID_HPP_
