#pragma once

#include <stdexcept>
#include <string>

namespace hypform {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad shapes, odd ranks, inadmissible
/// parameters, unparsable documents).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Scalars from two unrelated square-root towers were combined.
class IncompatibleTower : public Error {
 public:
  IncompatibleTower() : Error("scalars belong to incompatible tower contexts") {}
};

/// The request is well formed but has no solution, e.g. transporting between
/// subspaces with different invariants. `reason()` is a short stable tag.
class Infeasible : public Error {
 public:
  Infeasible(std::string reason, const std::string& detail)
      : Error(reason + (detail.empty() ? "" : ": " + detail)), reason_(std::move(reason)) {}
  explicit Infeasible(std::string reason) : Infeasible(std::move(reason), "") {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// Only an element of O(V,Q) with determinant -1 realizes the request; no
/// element of SO(V,Q) does.
class Obstruction : public Infeasible {
 public:
  explicit Obstruction(const std::string& detail) : Infeasible("SO obstruction", detail) {}
};

/// Certified numerics could not separate a decision boundary at the maximum
/// allowed precision.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// An internally produced object failed its own exact verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hypform
