#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation (NaN/Inf, pole,
// wrong half-plane, negative radicand, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural parameter out of range (alpha, beta, weights, counts, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Bad grid construction or a grid that does not match its data.
class GridError : public Error {
 public:
  using Error::Error;
};

// Grid too coarse for the requested spectral content.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Numerical Laplace inversion failed its residual check.
class InversionError : public Error {
 public:
  using Error::Error;
};

// Not enough samples for a statistical estimator.
class SampleSizeError : public Error {
 public:
  using Error::Error;
};

// Output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracwave
