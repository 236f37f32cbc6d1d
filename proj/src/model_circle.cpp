#include "csq/model_circle.hpp"

#include <algorithm>
#include <cmath>

namespace csq {

namespace {

OrthoFamily circle_family() {
  return OrthoFamily(Domain::circle(),
                     {[](const Point& x) { return Complex{std::cos(x.theta), 0.0}; },
                      [](const Point& x) { return Complex{std::sin(x.theta), 0.0}; }},
                     {"cos", "sin"}, 2);
}

}  // namespace

CircleSymbols circle_symbols(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  return {
      {[=](const Point& x) {
         return Complex{mean + half_diff * std::cos(2.0 * x.theta) + b * std::sin(2.0 * x.theta), 0.0};
       },
       SymbolKind::Lower},
      {[=](const Point& x) {
         return Complex{mean + 2.0 * half_diff * std::cos(2.0 * x.theta) + 2.0 * b * std::sin(2.0 * x.theta), 0.0};
       },
       SymbolKind::Upper},
  };
}

CirclePauliCoefficients circle_matrix_decomposition(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw InvalidArgument("circle observables are 2x2 matrices");
  for (const auto& z : a.data())
    if (z.imag() != 0.0) throw InvalidArgument("circle observables must be real");
  if (a(0, 1) != a(1, 0)) throw InvalidArgument("circle observables must be symmetric");
  return {0.5 * (a(0, 0).real() + a(1, 1).real()), a(0, 1).real(), 0.5 * (a(0, 0).real() - a(1, 1).real())};
}

ComplexMatrix circle_matrix(double a, double b, double d) { return ComplexMatrix{{a, b}, {b, d}}; }

CircleModel::CircleModel() : frame_(circle_family()), rule_(build_rule(Domain::circle(), 8)) {}

std::vector<ClassicalObservable> CircleModel::symbol_basis() {
  return {observables::constant(1.0), observables::circle_cos(2), observables::circle_sin(2)};
}

double CircleModel::max_imaginary_part(const ComplexMatrix& m) {
  double r = 0.0;
  for (const auto& z : m.data()) r = std::max(r, std::abs(z.imag()));
  return r;
}

}  // namespace csq
