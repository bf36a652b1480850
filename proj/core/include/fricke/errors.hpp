#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fricke {

/// Malformed word text. `position()` is the 0-based byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside the parameter range it is defined for.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The (-2,3,2n+1)-pretzel knot is a torus knot for n in {0, 1, 2}; the
/// component count argument does not apply there.
class TorusKnotError : public ParameterError {
 public:
  explicit TorusKnotError(long long n)
      : ParameterError("n = " + std::to_string(n) +
                       " gives a torus knot; the argument needs n outside {0, 1, 2}"),
        n_(n) {}

  long long n() const noexcept { return n_; }

 private:
  long long n_;
};

}  // namespace fricke
