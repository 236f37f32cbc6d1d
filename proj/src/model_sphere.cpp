#include "csq/model_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace csq {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

ComplexMatrix weighted_projector(const CoherentFrame& frame, const Point& x) {
  const auto s = frame.state(x);
  const double w = frame.weight(x);
  ComplexMatrix p(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) p(i, j) = w * s[i] * std::conj(s[j]);
  return p;
}

std::array<double, 3> cartesian(const Point& x) {
  return {std::sin(x.theta) * std::cos(x.phi), std::sin(x.theta) * std::sin(x.phi), std::cos(x.theta)};
}

}  // namespace

OrthoFamily SphereSpinHalfModel::family() {
  return OrthoFamily(Domain::sphere(),
                     {[](const Point& x) { return Complex{kSqrt2 * std::cos(0.5 * x.theta), 0.0}; },
                      [](const Point& x) { return kSqrt2 * std::sin(0.5 * x.theta) * std::polar(1.0, x.phi); }},
                     {"Phi1", "Phi2"}, 1);
}

OrthoFamily SphereSpinHalfModel::phase_alternative_family() {
  return OrthoFamily(Domain::sphere(),
                     {[](const Point& x) { return kSqrt2 * std::cos(0.5 * x.theta) * std::polar(1.0, -0.5 * x.phi); },
                      [](const Point& x) { return kSqrt2 * std::sin(0.5 * x.theta) * std::polar(1.0, 0.5 * x.phi); }},
                     {"Phi1'", "Phi2'"}, 1);
}

SphereSpinHalfModel::SphereSpinHalfModel() : frame_(family()), rule_(build_rule(Domain::sphere(), 8)) {}

double SphereSpinHalfModel::projector_decomposition_residual() const {
  double r = 0.0;
  for (const Point& x : rule_.nodes()) {
    const auto c = cartesian(x);
    const ComplexMatrix expected = pauli(0) + c[0] * pauli(1) + c[1] * pauli(2) + c[2] * pauli(3);
    r = std::max(r, max_abs_diff(weighted_projector(frame_, x), expected));
  }
  return r;
}

std::array<SigmaSymbols, 4> SphereSpinHalfModel::sigma_symbols() const {
  std::array<SigmaSymbols, 4> out;
  out[0] = {{[](const Point&) { return Complex{1.0, 0.0}; }, SymbolKind::Lower},
            {[](const Point&) { return Complex{1.0, 0.0}; }, SymbolKind::Upper}};
  for (int k = 1; k <= 3; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    out[static_cast<std::size_t>(k)] = {
        {[idx](const Point& x) { return Complex{cartesian(x)[idx], 0.0}; }, SymbolKind::Lower},
        {[idx](const Point& x) { return Complex{3.0 * cartesian(x)[idx], 0.0}; }, SymbolKind::Upper}};
  }
  return out;
}

double SphereSpinHalfModel::sigma_symbol_residual() const {
  const auto table = sigma_symbols();
  double r = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto& entry = table[static_cast<std::size_t>(k)];
    const SymbolFunction lower = lower_symbol(frame_, pauli(k));
    for (const Point& x : rule_.nodes()) r = std::max(r, std::abs(lower(x) - entry.lower(x)));
    const ClassicalObservable up{entry.upper.evaluate, "upper(sigma)", true, 1};
    r = std::max(r, max_abs_diff(quantize_general(frame_, rule_, up), pauli(k)));
  }
  return r;
}

std::array<HermitianOperator, 3> SphereSpinHalfModel::coordinate_operators() const {
  return {quantize(frame_, rule_, observables::coordinate(1)), quantize(frame_, rule_, observables::coordinate(2)),
          quantize(frame_, rule_, observables::coordinate(3))};
}

AngleOperators SphereSpinHalfModel::angle_operators(const AdaptiveOptions& options) const {
  return {quantize(frame_, observables::polar_angle(), options), quantize(frame_, observables::azimuth(), options)};
}

CommutatorReport SphereSpinHalfModel::commutator_report(const AdaptiveOptions& options) const {
  return commutator_report(angle_operators(options));
}

CommutatorReport SphereSpinHalfModel::commutator_report(const AngleOperators& ops) const {
  CommutatorReport rep;
  rep.matrix = commutator(ops.phi, ops.theta);
  const auto coeffs = pauli_decompose(rep.matrix);
  // coeffs[1] = i c
  rep.c = coeffs[1].imag();
  rep.off_sigma1 = std::max({std::abs(coeffs[0]), std::abs(coeffs[2]), std::abs(coeffs[3]), std::abs(coeffs[1].real())});

  const SymbolFunction lower = lower_symbol(frame_, rep.matrix);
  const SymbolFunction square = lower_symbol(frame_, rep.matrix * rep.matrix);
  double sum = 0.0;
  for (const Point& x : rule_.nodes()) {
    const Complex expected{0.0, rep.c * std::sin(x.theta) * std::cos(x.phi)};
    rep.lower_symbol_residual = std::max(rep.lower_symbol_residual, std::abs(lower(x) - expected));
    sum += square(x).real();
  }
  rep.square_symbol = sum / static_cast<double>(rule_.size());
  for (const Point& x : rule_.nodes())
    rep.square_symbol_spread = std::max(rep.square_symbol_spread, std::abs(square(x) - rep.square_symbol));
  return rep;
}

double SphereSpinHalfModel::phase_alternative_equivalence() const {
  const CoherentFrame alt(phase_alternative_family());
  double r = 0.0;
  for (const Point& x : rule_.nodes())
    r = std::max(r, max_abs_diff(weighted_projector(frame_, x), weighted_projector(alt, x)));
  return r;
}

}  // namespace csq
