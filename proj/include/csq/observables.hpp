#pragma once

// Classical observables: functions on the observation set to be quantized.

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "csq/error.hpp"

namespace csq {

struct ClassicalObservable {
  std::function<Complex(const Point&)> evaluate;
  std::string description;
  bool is_real = true;
  /// Trigonometric degree when the observable is a trig polynomial; lets the
  /// quantizer pick an exact rule. Empty means "integrate adaptively".
  std::optional<int> degree;

  Complex operator()(const Point& x) const { return evaluate(x); }
};

namespace observables {

ClassicalObservable constant(double c);

/// Cartesian coordinate x^k (k = 1, 2, 3) of the unit sphere.
ClassicalObservable coordinate(int k);

/// The polar angle theta in [0, pi].
ClassicalObservable polar_angle();

/// The azimuth phi, taken on the branch [0, 2pi).
ClassicalObservable azimuth();

/// Y_l^m, normalized under the unit-mass sphere measure.
ClassicalObservable harmonic(int l, int m);

struct HarmonicTerm {
  int l = 0;
  int m = 0;
  Complex coefficient{};
};

/// sum_k c_k Y_{l_k}^{m_k}.
ClassicalObservable harmonic_sum(std::span<const HarmonicTerm> terms);

/// cos(k theta) and sin(k theta) on the circle.
ClassicalObservable circle_cos(int k);
ClassicalObservable circle_sin(int k);

/// a f + b g.
ClassicalObservable linear_combination(Complex a, const ClassicalObservable& f, Complex b,
                                       const ClassicalObservable& g);

}  // namespace observables
}  // namespace csq
