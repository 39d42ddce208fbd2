#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace equimap {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// Scalar field of a matrix or representation.
enum class Field { Real, Complex };

inline Field join(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex
                                                      : Field::Real;
}

inline const char* field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

/// Invalid input: bad geometry, malformed rep expression, point outside the
/// domain, violated precondition. CLI exit code 2.
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure: closure residual too large, rank detection failed,
/// non-idempotent Haar average, radical detected. CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace equimap
