#pragma once

#include <stdexcept>
#include <string>

namespace epsnc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad sizes, labels outside the declared set, invalid
/// groupings, parse failures.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or state-count limit was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A lattice property failed to hold (meet not closed, join not unique).
/// Never expected; raising it means a structural claim was falsified.
class LatticeViolation : public Error {
 public:
  using Error::Error;
};

/// Moment or cumulant data requested for a word that has none.
class MissingEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace epsnc
