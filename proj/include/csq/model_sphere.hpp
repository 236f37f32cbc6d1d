#pragma once

// Spin-1/2 quantization of the 2-sphere into C^2 with the family
//   Phi_1 = sqrt(2) cos(theta/2),   Phi_2 = sqrt(2) sin(theta/2) e^{i phi}.
// N(x) = 2 and 2|x><x| = sigma_0 + x^1 sigma_1 + x^2 sigma_2 + x^3 sigma_3.

#include <array>

#include "csq/frames.hpp"
#include "csq/operator.hpp"
#include "csq/quantizer.hpp"

namespace csq {

struct SigmaSymbols {
  SymbolFunction lower;
  SymbolFunction upper;
};

struct AngleOperators {
  HermitianOperator theta;
  HermitianOperator phi;
};

/// [A_phi, A_theta] written as i c sigma_1 plus a remainder.
struct CommutatorReport {
  ComplexMatrix matrix;
  /// Proportionality constant c in [A_phi, A_theta] = i c sigma_1.
  double c = 0.0;
  /// Largest Pauli component other than the i c sigma_1 part.
  double off_sigma1 = 0.0;
  /// max over nodes of |<x|C|x> - i c sin(theta) cos(phi)|.
  double lower_symbol_residual = 0.0;
  /// Mean of <x|C^2|x> over the rule nodes; equals -c^2.
  double square_symbol = 0.0;
  /// max over nodes of |<x|C^2|x> - square_symbol|.
  double square_symbol_spread = 0.0;
};

class SphereSpinHalfModel {
 public:
  SphereSpinHalfModel();

  static OrthoFamily family();
  /// sqrt(2) cos(theta/2) e^{-i phi/2}, sqrt(2) sin(theta/2) e^{i phi/2}:
  /// the same states up to the global phase e^{-i phi/2}.
  static OrthoFamily phase_alternative_family();

  const CoherentFrame& frame() const { return frame_; }
  const QuadratureRule& rule() const { return rule_; }

  double identity_residual() const { return check_identity(frame_, rule_); }
  /// max over nodes of |N|x><x| - (sigma_0 + x^i sigma_i)|.
  double projector_decomposition_residual() const;

  /// Closed forms: lower(sigma_0) = 1, lower(sigma_i) = x^i, upper(sigma_0) = 1,
  /// upper(sigma_i) = 3 x^i.
  std::array<SigmaSymbols, 4> sigma_symbols() const;
  /// Largest disagreement between the closed forms and the quantizer: lower
  /// symbols compared at the rule nodes, upper symbols through quantize.
  double sigma_symbol_residual() const;

  /// Quantized Cartesian coordinates; each equals sigma_i / 3.
  std::array<HermitianOperator, 3> coordinate_operators() const;

  /// A_theta and A_phi (phi on [0, 2pi)), adaptively integrated.
  AngleOperators angle_operators(const AdaptiveOptions& options = {}) const;

  CommutatorReport commutator_report(const AdaptiveOptions& options = {}) const;
  CommutatorReport commutator_report(const AngleOperators& ops) const;

  /// max over nodes of the difference between the weighted projectors built
  /// from the two families.
  double phase_alternative_equivalence() const;

 private:
  CoherentFrame frame_;
  QuadratureRule rule_;
};

}  // namespace csq
