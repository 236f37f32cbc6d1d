#include "csq/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "csq/harmonics.hpp"

namespace csq::observables {

ClassicalObservable constant(double c) {
  return {[c](const Point&) { return Complex{c, 0.0}; }, "const(" + std::to_string(c) + ")", true, 0};
}

ClassicalObservable coordinate(int k) {
  switch (k) {
    case 1:
      return {[](const Point& x) { return Complex{std::sin(x.theta) * std::cos(x.phi), 0.0}; }, "x1", true, 1};
    case 2:
      return {[](const Point& x) { return Complex{std::sin(x.theta) * std::sin(x.phi), 0.0}; }, "x2", true, 1};
    case 3:
      return {[](const Point& x) { return Complex{std::cos(x.theta), 0.0}; }, "x3", true, 1};
    default:
      throw InvalidArgument("coordinate index must be 1, 2 or 3");
  }
}

ClassicalObservable polar_angle() {
  return {[](const Point& x) { return Complex{x.theta, 0.0}; }, "theta", true, std::nullopt};
}

ClassicalObservable azimuth() {
  return {[](const Point& x) {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            double p = std::fmod(x.phi, two_pi);
            if (p < 0.0) p += two_pi;
            return Complex{p, 0.0};
          },
          "phi", true, std::nullopt};
}

ClassicalObservable harmonic(int l, int m) {
  if (l < 0 || std::abs(m) > l) throw InvalidArgument("invalid harmonic indices");
  return {[l, m](const Point& x) { return spherical_harmonic(l, m, x); },
          "Y(" + std::to_string(l) + "," + std::to_string(m) + ")", m == 0, l};
}

ClassicalObservable harmonic_sum(std::span<const HarmonicTerm> terms) {
  std::vector<HarmonicTerm> copy(terms.begin(), terms.end());
  int lmax = 0;
  for (const auto& t : copy) {
    if (t.l < 0 || std::abs(t.m) > t.l) throw InvalidArgument("invalid harmonic indices in sum");
    lmax = std::max(lmax, t.l);
  }
  std::string desc = "harmonic_sum[" + std::to_string(copy.size()) + "]";
  return {[copy, lmax](const Point& x) {
            const auto y = spherical_harmonics(lmax, x);
            Complex s{};
            for (const auto& t : copy) s += t.coefficient * y[harmonic_index(t.l, t.m)];
            return s;
          },
          desc, false, lmax};
}

ClassicalObservable circle_cos(int k) {
  return {[k](const Point& x) { return Complex{std::cos(k * x.theta), 0.0}; }, "cos(" + std::to_string(k) + "t)",
          true, std::abs(k)};
}

ClassicalObservable circle_sin(int k) {
  return {[k](const Point& x) { return Complex{std::sin(k * x.theta), 0.0}; }, "sin(" + std::to_string(k) + "t)",
          true, std::abs(k)};
}

ClassicalObservable linear_combination(Complex a, const ClassicalObservable& f, Complex b,
                                       const ClassicalObservable& g) {
  std::optional<int> degree;
  if (f.degree && g.degree) degree = std::max(*f.degree, *g.degree);
  const bool real = f.is_real && g.is_real && a.imag() == 0.0 && b.imag() == 0.0;
  return {[a, b, fe = f.evaluate, ge = g.evaluate](const Point& x) { return a * fe(x) + b * ge(x); },
          "lincomb(" + f.description + "," + g.description + ")", real, degree};
}

}  // namespace csq::observables
