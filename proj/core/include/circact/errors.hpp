#pragma once

#include <stdexcept>
#include <string>

namespace circact {

// Base for all library errors. Everything thrown on purpose derives from
// this, so callers can catch one type at the boundary.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input fails a documented precondition or invariant.
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A would-be homeomorphism has a piece with slope <= 0.
struct NonMonotone : ValidationError {
  using ValidationError::ValidationError;
};

// Argument outside the documented domain.
struct OutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

struct BadRadius : ValidationError {
  using ValidationError::ValidationError;
};

// Sign assignment length does not match the gap count.
struct SignMismatch : ValidationError {
  using ValidationError::ValidationError;
};

// No block-matching homeomorphism exists for the requested orientation.
struct PatternMismatch : Error {
  using Error::Error;
};

struct BadIndex : ValidationError {
  using ValidationError::ValidationError;
};

// A generator handed to a fixed-set routine does not fix the anchor point.
struct GeneratorNotInStabilizer : ValidationError {
  using ValidationError::ValidationError;
};

// Recovery could not reach a verdict; the oracle does not behave like a
// model action on the probed region.
struct RecoveryFailure : Error {
  using Error::Error;
};

struct Inconclusive : RecoveryFailure {
  using RecoveryFailure::RecoveryFailure;
};

struct EmptyFixedSet : RecoveryFailure {
  using RecoveryFailure::RecoveryFailure;
};

struct NoShrink : RecoveryFailure {
  using RecoveryFailure::RecoveryFailure;
};

}  // namespace circact
