#pragma once

#include <stdexcept>
#include <string>

namespace gorcol {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Scalars or matrices from different field contexts were mixed.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix shapes do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A degree above the handle's truncation bound was requested.
class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

/// The truncation bound was too small to certify stabilization
/// (non-Artinian quotient, unstabilized colon, ...).
class TruncationError : public Error {
 public:
  using Error::Error;
};

class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroIdealError : public Error {
 public:
  using Error::Error;
};

/// Colon by the unit ideal, or a unit generator where none is allowed.
class UnitIdealError : public Error {
 public:
  using Error::Error;
};

/// The witness colon collapses (l^s lies in the complete intersection).
class DegenerateWitnessError : public Error {
 public:
  using Error::Error;
};

/// A supplied witness failed its side conditions (not Gorenstein, not
/// contained in the target ideal).
class WitnessRejectedError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the hypotheses of the identity being checked.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotMPrimaryError : public Error {
 public:
  using Error::Error;
};

/// Randomized reduction search exhausted its retry budget.
class ReductionFailureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A cross-check that should hold by construction failed; indicates a bug
/// or a genuinely violated mathematical identity. Always fatal.
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace gorcol
