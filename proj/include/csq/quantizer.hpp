#pragma once

// The quantization map f -> A_f, lower/upper symbols and the Berezin-Lieb
// inequalities.
//
// Matrix elements follow the weighted convention of CoherentFrame:
//   [A_f]_ij = integral N(x) f(x) |x>_i conj(|x>_j) dmu
//            = integral f(x) phi_i(x) conj(phi_j(x)) dmu.

#include <functional>
#include <span>
#include <vector>

#include "csq/frames.hpp"
#include "csq/observables.hpp"
#include "csq/operator.hpp"
#include "csq/quad.hpp"

namespace csq {

enum class SymbolKind { Lower, Upper };

struct SymbolFunction {
  std::function<Complex(const Point&)> evaluate;
  SymbolKind kind = SymbolKind::Lower;

  Complex operator()(const Point& x) const { return evaluate(x); }
};

/// A_f for any (possibly complex) f with a caller-chosen rule.
ComplexMatrix quantize_general(const CoherentFrame& frame, const QuadratureRule& rule, const ClassicalObservable& f);

/// A_f with an automatically chosen rule: exact when f.degree is known,
/// adaptive otherwise.
ComplexMatrix quantize_general(const CoherentFrame& frame, const ClassicalObservable& f,
                               const AdaptiveOptions& options = {});

/// A_f for real f. The result is symmetrized; asymmetry above 1e-10 is logged
/// to stderr as a quadrature-quality warning.
HermitianOperator quantize(const CoherentFrame& frame, const QuadratureRule& rule, const ClassicalObservable& f);
HermitianOperator quantize(const CoherentFrame& frame, const ClassicalObservable& f,
                           const AdaptiveOptions& options = {});

/// x -> <x|O|x> with the normalized state.
SymbolFunction lower_symbol(const CoherentFrame& frame, const ComplexMatrix& op);

struct UpperSymbol {
  SymbolFunction symbol;
  /// Minimum-norm coefficients over the candidate basis.
  std::vector<Complex> coefficients;
  /// Set when the quantized basis is linearly dependent, so other
  /// coefficient vectors reproduce the operator equally well.
  bool non_unique = false;
  /// max-norm of quantize(symbol) - O.
  double residual = 0.0;
};

/// Least-squares upper symbol sum_k c_k b_k with quantize(sum) = O.
/// Throws UnrepresentableError if the residual exceeds `tolerance`.
UpperSymbol upper_symbol(const CoherentFrame& frame, const ComplexMatrix& op,
                         std::span<const ClassicalObservable> basis, double tolerance = 1e-8);

/// Integrals of g(lower) and g(upper) against dnu = N dmu, together with Tr g(O).
/// The `*_unweighted` values use plain dmu and are informational only.
struct BerezinLiebBounds {
  double lower = 0.0;
  double trace = 0.0;
  double upper = 0.0;
  double lower_unweighted = 0.0;
  double upper_unweighted = 0.0;

  /// min(trace - lower, upper - trace)
  double slack() const;
  bool holds(double tolerance = 1e-9) const { return slack() >= -tolerance; }
};

BerezinLiebBounds berezin_lieb_check(const CoherentFrame& frame, const HermitianOperator& op,
                                     const SymbolFunction& upper, const std::function<double(double)>& g,
                                     const AdaptiveOptions& options = {});

/// Computes the upper symbol from `basis` first.
BerezinLiebBounds berezin_lieb_check(const CoherentFrame& frame, const HermitianOperator& op,
                                     std::span<const ClassicalObservable> basis,
                                     const std::function<double(double)>& g, const AdaptiveOptions& options = {});

}  // namespace csq
