#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// An argument lies outside an operation's domain (e.g. n below a formula's
/// lower bound).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is valid but exceeds a documented enumeration capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A result violated an invariant that holds mathematically, such as a
/// non-integral reduced count. Always indicates a defect.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fano
