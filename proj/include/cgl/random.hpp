//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file random.hpp
//  \brief Seeded state sampling for sweeps. Draws are generated from raw
//         mt19937_64 bits so a given seed reproduces byte-identical output.

#ifndef CGL_RANDOM_HPP_
#define CGL_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "cgl/rational.hpp"
#include "cgl/state.hpp"

namespace cgl {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1); 53 mantissa bits, distribution-library free.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  std::uint64_t bits() { return gen_(); }

  Vec3 unit_vector() {
    // Rejection from the cube keeps the draw portable and unbiased.
    for (;;) {
      Vec3 x(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      const double n2 = x.squaredNorm();
      if (n2 > 1e-4 && n2 <= 1.0) return x / std::sqrt(n2);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Log-uniform positive quantities over four decades, random field direction,
// O(1) velocities. No hyperbolicity restriction.
inline PlasmaState sample_state(Rng& rng) {
  PlasmaState u;
  u.rho = rng.log_uniform(1e-2, 1e2);
  u.p_par = rng.log_uniform(1e-2, 1e2);
  u.p_perp = rng.log_uniform(1e-2, 1e2);
  u.H = rng.log_uniform(1e-1, 1e1) * rng.unit_vector();
  u.v = Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
  return u;
}

inline bool strictly_hyperbolic(const PlasmaState& u) {
  const double h2 = u.H.squaredNorm();
  const double tau = (u.p_par - u.p_perp) / h2;
  const double a_p = u.p_perp / u.p_par;
  return u.rho > 0.0 && tau > -1.0 / a_p && tau < 1.0 && 6.0 * u.p_par > u.p_perp;
}

inline PlasmaState sample_hyperbolic(Rng& rng) {
  for (;;) {
    PlasmaState u = sample_state(rng);
    if (strictly_hyperbolic(u)) return u;
  }
}

// tau > 1: parallel pressure dominating the magnetic tension.
inline PlasmaState sample_firehose(Rng& rng) {
  for (;;) {
    PlasmaState u = sample_state(rng);
    const double tau = (u.p_par - u.p_perp) / u.H.squaredNorm();
    if (tau > 1.0) return u;
  }
}

// a_p above the mirror threshold 6 (1 + 1/beta_perp), with a small relative
// margin so sampled states sit inside the unstable region rather than on its
// boundary, where growth rates vanish.
inline PlasmaState sample_mirror(Rng& rng, double margin = 1.05) {
  for (;;) {
    PlasmaState u = sample_state(rng);
    const double beta_perp = 2.0 * u.p_perp / u.H.squaredNorm();
    const double a_p = u.p_perp / u.p_par;
    if (a_p > margin * 6.0 * (1.0 + 1.0 / beta_perp)) return u;
  }
}

// Rational state with small random numerators/denominators, conditioned to be
// hyperbolic so the exact identities run in the certified region.
inline RationalState sample_rational_hyperbolic(Rng& rng) {
  auto draw = [&rng](int lo, int hi) {
    return static_cast<int>(rng.bits() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
  };
  for (;;) {
    RationalState u;
    u.rho = Rational(draw(1, 20), draw(1, 7));
    u.p_par = Rational(draw(1, 20), draw(1, 7));
    u.p_perp = Rational(draw(1, 20), draw(1, 7));
    for (int i = 0; i < 3; ++i) {
      u.v[i] = Rational(draw(-10, 10), draw(1, 7));
      u.H[i] = Rational(draw(-10, 10), draw(1, 7));
    }
    if (u.H2() == Rational(0)) continue;
    const Rational tau = (u.p_par - u.p_perp) / u.H2();
    if (!(tau < Rational(1))) continue;
    if (!(u.p_par + u.p_perp * (u.p_par - u.p_perp) / u.H2() > Rational(0)))
      continue;
    if (!(Rational(6) * u.p_par - u.p_perp > Rational(0))) continue;
    return u;
  }
}

}  // namespace cgl

#endif  // CGL_RANDOM_HPP_
