#pragma once

#include <stdexcept>
#include <string>

namespace predom {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label that does not name an element of the carrier.
class UnknownElement : public Error {
 public:
  explicit UnknownElement(std::string const& label)
      : Error("unknown element '" + label + "'"), label_(label) {}
  std::string const& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A relation failed the predomain axioms where a predomain was required.
class NotAPredomain : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A monoid and relation that do not form a preCuntz semigroup.
class NotAPreCuntz : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive enumeration would exceed its configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A postcondition that holds for all valid input failed: a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace predom
