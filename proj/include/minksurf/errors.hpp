#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace minksurf {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expression source. `offset` is the byte position of the
/// offending token.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

/// A function name that would break holomorphy (conj, abs, re, im, ...).
struct DisallowedFunction : Error {
  DisallowedFunction(const std::string& name, std::size_t offset)
      : Error("non-holomorphic function '" + name + "' is not allowed (at byte " +
              std::to_string(offset) + ")"),
        offset(offset),
        name(name) {}
  std::size_t offset;
  std::string name;
};

/// Division by an exactly-zero denominator during evaluation.
struct EvalSingularity : Error {
  explicit EvalSingularity(std::complex<double> at)
      : Error("evaluation hit a zero denominator at w = (" + std::to_string(at.real()) + ", " +
              std::to_string(at.imag()) + ")"),
        at(at) {}
  std::complex<double> at;
};

struct ZeroVector : Error {
  ZeroVector() : Error("causal character of the zero vector is undefined") {}
};

/// Surface data failed the |mu| > eps or ||a| - 1| > eps probe.
struct RegularityError : Error {
  RegularityError(const std::string& what, std::complex<double> worst)
      : Error(what), worst_w(worst) {}
  std::complex<double> worst_w;
};

struct QuadratureNoConvergence : Error {
  using Error::Error;
};

struct DegenerateMetric : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

/// Argument was not a point of the hyperboloid H^2 (unit timelike,
/// future directed, last component zero).
struct InvalidHyperbolicPoint : Error {
  using Error::Error;
};

/// Bad scenario configuration (missing key, wrong type, invalid value).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace minksurf
