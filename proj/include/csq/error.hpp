#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace csq {

using Complex = std::complex<double>;

/// A point of the observation set. On the circle only `theta` is used.
struct Point {
  double theta = 0.0;
  double phi = 0.0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested rule would exceed the node-count limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, Point node) : Error(what), node_(node) {}
  Point node() const { return node_; }

 private:
  Point node_;
};

/// Adaptive quadrature ran out of refinements. Carries the last two iterates.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<Complex> previous,
                   std::vector<Complex> current)
      : Error(what), previous_(std::move(previous)), current_(std::move(current)) {}
  const std::vector<Complex>& previous() const { return previous_; }
  const std::vector<Complex>& current() const { return current_; }

 private:
  std::vector<Complex> previous_;
  std::vector<Complex> current_;
};

/// The weight N(x) vanished where a coherent state was requested.
class DegeneratePointError : public Error {
 public:
  DegeneratePointError(const std::string& what, Point node) : Error(what), node_(node) {}
  Point node() const { return node_; }

 private:
  Point node_;
};

class NotOrthonormalError : public Error {
 public:
  NotOrthonormalError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double asymmetry)
      : Error(what), asymmetry_(asymmetry) {}
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

/// Eigensolver did not converge, or a spectral function was non-finite.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// No upper symbol in the supplied basis reproduces the operator.
class UnrepresentableError : public Error {
 public:
  UnrepresentableError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, double smallest_singular_value)
      : Error(what), smallest_(smallest_singular_value) {}
  double smallest_singular_value() const { return smallest_; }

 private:
  double smallest_;
};

}  // namespace csq
