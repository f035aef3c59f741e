#ifndef FLIPCOUNT_ERRORS_HPP
#define FLIPCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flipcount {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input file/object violates the documented schema or a documented precondition.
struct SchemaError : Error {
  using Error::Error;
};

// Base for rejected flip candidates; carries a witness in the message.
struct FlipError : Error {
  using Error::Error;
};

// The candidate map composed with itself is not the identity.
struct NotInvolution : FlipError {
  using FlipError::FlipError;
};

// The candidate map does not send the block language onto itself reversed.
struct NotReversing : FlipError {
  using FlipError::FlipError;
};

// A zero-one matrix pair (A, J) fails J*J = I or J*A = A^T*J.
struct FlipIncompatible : FlipError {
  using FlipError::FlipError;
};

// The presentation graph is not strongly connected where that is required.
struct NotIrreducible : Error {
  using Error::Error;
};

// A symbol outside the declared alphabet was used.
struct BadSymbol : Error {
  using Error::Error;
};

// A word that must belong to the block language does not.
struct NotABlock : Error {
  using Error::Error;
};

// Trimming removed every vertex: the presented shift space is empty.
struct EmptyShift : Error {
  using Error::Error;
};

// The transition monoid exceeded the configured element cap.
struct MonoidBlowup : Error {
  using Error::Error;
};

// The star map left the computed class families; impossible for valid input.
struct StarMismatch : Error {
  using Error::Error;
};

// Level matrices do not cover levels 1..r.
struct IncompleteLevels : Error {
  using Error::Error;
};

// A series operation was applied to a series with the wrong constant term.
struct BadConstantTerm : Error {
  using Error::Error;
};

// A computed structural invariant failed; indicates a bug or invalid input.
struct InvariantViolation : Error {
  using Error::Error;
};

// A randomized test trial failed to assemble a family meeting its hypotheses.
struct HypothesisConstructionFailure : Error {
  using Error::Error;
};

}  // namespace flipcount

#endif
