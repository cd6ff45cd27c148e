#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordalg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReflexive : public Error {
 public:
  explicit NotReflexive(std::size_t i)
      : Error("relation is not reflexive at " + std::to_string(i)), index(i) {}
  std::size_t index;
};

class NotAntisymmetric : public Error {
 public:
  NotAntisymmetric(std::size_t i, std::size_t j)
      : Error("relation is not antisymmetric: " + std::to_string(i) + " and " +
              std::to_string(j) + " are mutually related"),
        first(i),
        second(j) {}
  std::size_t first;
  std::size_t second;
};

class NotTransitive : public Error {
 public:
  NotTransitive(std::size_t i, std::size_t j, std::size_t k)
      : Error("relation is not transitive: " + std::to_string(i) + " <= " +
              std::to_string(j) + " <= " + std::to_string(k) + " but not " +
              std::to_string(i) + " <= " + std::to_string(k)),
        i(i),
        j(j),
        k(k) {}
  std::size_t i, j, k;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class NotMonotone : public Error {
 public:
  using Error::Error;
};

class NotEmbedding : public Error {
 public:
  explicit NotEmbedding(std::size_t step)
      : Error("chain step " + std::to_string(step) + " is not an embedding"), step(step) {}
  std::size_t step;
};

/// A poset is too large for an exhaustive procedure (canonical forms, bitmask sets).
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class Explosion : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class ClosureViolation : public Error {
 public:
  ClosureViolation(std::string op, std::string valuation)
      : Error("operation " + op + " applied to " + valuation + " leaves the subset"),
        op(std::move(op)),
        valuation(std::move(valuation)) {}
  std::string op;
  std::string valuation;
};

class SplitEquationViolated : public Error {
 public:
  explicit SplitEquationViolated(std::string which)
      : Error("split equation violated: " + which), which(std::move(which)) {}
  std::string which;
};

/// Raised when a construction that must always succeed did not; indicates a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotAModel : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit an undefined term where definedness was required.
class UndefinedEvaluation : public Error {
 public:
  using Error::Error;
};

}  // namespace ordalg
