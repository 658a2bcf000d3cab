#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unkry {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operator construction.
class NonSquare : public Error {
 public:
  using Error::Error;
};

class AsymmetryExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

// Iteration.
class ZeroRightHandSide : public Error {
 public:
  using Error::Error;
};

// The current q is exactly zero; the caller should have stopped already.
class ZeroQ : public Error {
 public:
  using Error::Error;
};

// Normalized scaling hit a vanishing pivot alpha_k + beta_{k-1}.
class NormalizationBreakdown : public Error {
 public:
  NormalizationBreakdown(const std::string& msg, std::size_t step)
      : Error(msg), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_ = 0;
};

// YNorm scaling found a numerically zero unscaled y, which contradicts
// the linear independence of the y sequence.
class ZeroYScaling : public Error {
 public:
  using Error::Error;
};

// Terminated incompatible but the certificate vector is numerically zero.
class ZeroCertificate : public Error {
 public:
  using Error::Error;
};

// Conjugate gradients met a direction with p'Hp <= 0.
class NonpositiveCurvature : public Error {
 public:
  NonpositiveCurvature(const std::string& msg, std::size_t step, double curvature)
      : Error(msg), step_(step), curvature_(curvature) {}
  std::size_t step() const { return step_; }
  double curvature() const { return curvature_; }

 private:
  std::size_t step_ = 0;
  double curvature_ = 0.0;
};

// minres_update was handed a nonpositive q_k'q_k.
class NonpositiveDenominator : public Error {
 public:
  using Error::Error;
};

// extract_tridiagonal needs at least one recorded step.
class EmptyTrace : public Error {
 public:
  using Error::Error;
};

// Oracle-side failures.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// minres_qp requires all basis triples to have q != 0.
class ZeroQInBasis : public Error {
 public:
  using Error::Error;
};

class JacobiNoConvergence : public Error {
 public:
  using Error::Error;
};

// File parsing. line is 1-based, 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class EmptyVector : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace unkry
