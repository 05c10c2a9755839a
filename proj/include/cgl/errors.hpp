//========================================================================================
// cgl-lab: a verification toolkit for anisotropic (CGL) plasma-vacuum models
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file errors.hpp
//  \brief Exception types thrown across the toolkit.

#ifndef CGL_ERRORS_HPP_
#define CGL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cgl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid physical state: nonpositive density/pressures or vanishing field.
struct DomainError : Error {
  using Error::Error;
};

// Caller violated a documented precondition (distinct from invalid state).
struct PreconditionError : Error {
  using Error::Error;
};

// 6*p_par == p_perp: the symmetrizer weight 2/(6p_par - p_perp) is undefined.
struct SingularWeight : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

// Eigenvector matrix numerically singular in a modal evolution.
struct DefectivePencil : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

// Lift map lost invertibility (d1 Phi too close to zero).
struct DegenerateLift : Error {
  using Error::Error;
};

// Surface current violating j_c . e1 = 0 or the modal compatibility condition.
struct IncompatibleCurrent : Error {
  using Error::Error;
};

struct SolverFailure : Error {
  using Error::Error;
};

// A finite-volume cell left the hyperbolic region during a step.
struct HyperbolicityLoss : Error {
  using Error::Error;
};

// Basic-state constraints (interface/boundary identities) violated.
struct BasicStateViolation : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace cgl

#endif  // CGL_ERRORS_HPP_
