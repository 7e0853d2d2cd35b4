#pragma once

#include <stdexcept>
#include <string>

namespace tdm {

/// Base class for every computation error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator, recursion coefficient or Gamma argument vanished.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Symmetry class or feature outside the implemented range (e.g. beta = 4).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdm
