//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file smallmat.hpp
//  \brief Fixed-size dense matrix over a generic scalar.
//
//  The floating-point code paths use Eigen. This type exists so the same matrix
//  assembly routines can be instantiated with an exact rational scalar, where
//  Eigen's expression templates do not cooperate with boost::multiprecision.

#ifndef CGL_SMALLMAT_HPP_
#define CGL_SMALLMAT_HPP_

#include <array>
#include <cstddef>

#include <Eigen/Core>

namespace cgl {

template <class S, int R, int C>
struct Mat {
  std::array<S, static_cast<std::size_t>(R) * C> a{};

  static constexpr int rows() { return R; }
  static constexpr int cols() { return C; }

  S& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * C + j]; }
  const S& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * C + j];
  }

  static Mat zero() { return Mat{}; }

  static Mat identity() {
    static_assert(R == C);
    Mat m;
    for (int i = 0; i < R; ++i) m(i, i) = S(1);
    return m;
  }

  Mat operator+(const Mat& o) const {
    Mat r;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }

  Mat operator*(const S& s) const {
    Mat r;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
    return r;
  }

  template <int C2>
  Mat<S, R, C2> operator*(const Mat<S, C, C2>& o) const {
    Mat<S, R, C2> r;
    for (int i = 0; i < R; ++i)
      for (int k = 0; k < C; ++k) {
        const S& aik = (*this)(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < C2; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  Mat<S, C, R> transpose() const {
    Mat<S, C, R> r;
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return a == o.a; }

  bool is_zero() const {
    for (const S& x : a)
      if (!(x == S(0))) return false;
    return true;
  }

  Eigen::Matrix<double, R, C> eigen() const
    requires std::is_same_v<S, double>
  {
    Eigen::Matrix<double, R, C> m;
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j) m(i, j) = (*this)(i, j);
    return m;
  }
};

template <class S>
using Mat9 = Mat<S, 9, 9>;
template <class S>
using Vec9 = Mat<S, 9, 1>;

// Max |entry|; S must support abs-style comparison via ordering and negation.
template <class S, int R, int C>
S max_abs(const Mat<S, R, C>& m) {
  S best(0);
  for (const S& x : m.a) {
    S v = (x < S(0)) ? S(-x) : x;
    if (best < v) best = v;
  }
  return best;
}

}  // namespace cgl

#endif  // CGL_SMALLMAT_HPP_
