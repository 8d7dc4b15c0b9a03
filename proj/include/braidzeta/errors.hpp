#ifndef BRAIDZETA_ERRORS_HPP
#define BRAIDZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidzeta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// braid word parsing
struct ParseError : Error { using Error::Error; };
struct StrandMismatch : Error { using Error::Error; };
struct EmptyAmbiguous : Error { using Error::Error; };

// exact algebra
struct NonExactDivision : Error { using Error::Error; };
struct NonUnitConstantTerm : Error { using Error::Error; };
struct Cancelled : Error { using Error::Error; };

// zeta / residue
struct NoPoleAtOne : Error { using Error::Error; };
struct PoleNotSimple : Error { using Error::Error; };
struct NotAKnot : Error { using Error::Error; };

// torus hypotheses
struct NotCoprime : Error { using Error::Error; };
struct DimensionCap : Error { using Error::Error; };
struct FamilyInvariantViolated : Error { using Error::Error; };

// numeric
struct EigenSolverFailure : Error { using Error::Error; };

} // namespace braidzeta

#endif
