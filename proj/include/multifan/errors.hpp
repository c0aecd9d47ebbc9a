#pragma once

#include <stdexcept>
#include <string>

namespace multifan {

// Base class for everything thrown by this library.  Callers that only want
// a coarse "input problem vs. internal bug" split can catch `Error` and look
// at the concrete type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input matrix/basis is singular where a nonsingular one is required.
struct SingularInput : Error { using Error::Error; };

// Vector lies on a wall (or pairings are non-integral where lattice points
// are required); the requested computation needs a generic direction.
struct NotGeneric : Error { using Error::Error; };

// A denominator or group order shares a factor with the level N.
struct NotCoprime : Error { using Error::Error; };

// The given ray subset is not a simplex of the fan.
struct NotASimplex : Error { using Error::Error; };

// Completeness is a precondition of the requested invariant.
struct NotComplete : Error { using Error::Error; };

// Weight data violates the builder's constraints.
struct InvalidWeights : Error { using Error::Error; };

// A phi-factor with f = 0, a = 0, alpha = 1 has a genuine pole.
struct DegenerateFactor : Error { using Error::Error; };

// A sum of fractions failed to reduce to a Laurent polynomial (or its
// coefficients failed the integrality normalization).  This always signals
// a bug somewhere: the cancellation is guaranteed for valid input.
struct PolynomialityFailure : Error { using Error::Error; };

// A checker was invoked on an instance that does not satisfy the
// hypotheses of the statement being verified.
struct PreconditionUnmet : Error { using Error::Error; };

// Numeric evaluation too close to a pole of phi to be trustworthy.
struct PoleProximity : Error { using Error::Error; };

// An instance satisfies the hypotheses of a proved statement but fails its
// conclusion.  Reaching this is a hard failure worth surfacing loudly.
struct TheoremViolation : Error { using Error::Error; };

// Malformed fan file or option string.
struct ParseError : Error { using Error::Error; };

} // namespace multifan
