//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file rational.hpp
//  \brief Exact rational scalar used to certify matrix identities exactly.

#ifndef CGL_RATIONAL_HPP_
#define CGL_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "cgl/state.hpp"

namespace cgl {

using Rational = boost::multiprecision::cpp_rational;
using RationalState = StateT<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline PlasmaState to_plasma_state(const RationalState& u) {
  PlasmaState s;
  s.rho = to_double(u.rho);
  s.v = Vec3(to_double(u.v[0]), to_double(u.v[1]), to_double(u.v[2]));
  s.H = Vec3(to_double(u.H[0]), to_double(u.H[1]), to_double(u.H[2]));
  s.p_par = to_double(u.p_par);
  s.p_perp = to_double(u.p_perp);
  return s;
}

}  // namespace cgl

#endif  // CGL_RATIONAL_HPP_
