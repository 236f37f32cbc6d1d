#pragma once

// Real quantization of the circle into R^2: |theta> = (cos theta, sin theta),
// measure dtheta/pi. Observables are real symmetric 2x2 matrices
//   A = [[a, b], [b, d]] = (a+d)/2 sigma_0 + (a-d)/2 sigma_3 + b sigma_1.

#include "csq/frames.hpp"
#include "csq/operator.hpp"
#include "csq/quantizer.hpp"

namespace csq {

struct CircleSymbols {
  /// (a+d)/2 + (a-d)/2 cos 2t + b sin 2t
  SymbolFunction lower;
  /// (a+d)/2 + (a-d) cos 2t + 2b sin 2t
  SymbolFunction upper;
};

/// Closed-form lower and upper symbols of [[a, b], [b, d]].
CircleSymbols circle_symbols(double a, double b, double d);

/// Coefficients of A = c0 sigma_0 + c1 sigma_1 + c3 sigma_3.
struct CirclePauliCoefficients {
  double c0 = 0.0;
  double c1 = 0.0;
  double c3 = 0.0;
};

/// Throws InvalidArgument unless `a` is 2x2, real and symmetric.
CirclePauliCoefficients circle_matrix_decomposition(const ComplexMatrix& a);

ComplexMatrix circle_matrix(double a, double b, double d);

class CircleModel {
 public:
  CircleModel();

  const CoherentFrame& frame() const { return frame_; }
  /// Exact rule for the model's trig-polynomial integrands.
  const QuadratureRule& rule() const { return rule_; }

  double identity_residual() const { return check_identity(frame_, rule_); }

  /// {1, cos 2t, sin 2t}: enough to represent every real symmetric 2x2 matrix.
  static std::vector<ClassicalObservable> symbol_basis();

  /// Largest |Im| of any entry. The real Hilbert space lives inside the
  /// complex machinery, so model outputs must keep this at zero.
  static double max_imaginary_part(const ComplexMatrix& m);

 private:
  CoherentFrame frame_;
  QuadratureRule rule_;
};

}  // namespace csq
