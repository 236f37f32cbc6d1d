#include "csq/harmonics.hpp"

#include <cmath>
#include <string>

namespace csq {

namespace {

// Normalized associated Legendre functions P(l, m) for m >= 0 with
// (1/2) integral_{-1}^{1} P(l, m)^2 du = 1, Condon-Shortley phase included.
// Layout: l * (l + 1) / 2 + m.
std::vector<double> normalized_legendre(int lmax, double u) {
  const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
  std::vector<double> p(static_cast<std::size_t>((lmax + 1) * (lmax + 2) / 2), 0.0);
  auto at = [&](int l, int m) -> double& { return p[static_cast<std::size_t>(l * (l + 1) / 2 + m)]; };
  at(0, 0) = 1.0;
  for (int m = 1; m <= lmax; ++m) at(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * at(m - 1, m - 1);
  for (int m = 0; m < lmax; ++m) at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * u * at(m, m);
  for (int m = 0; m <= lmax; ++m) {
    for (int l = m + 2; l <= lmax; ++l) {
      const double ll = l, mm = m;
      const double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
      const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
      at(l, m) = a * (u * at(l - 1, m) - b * at(l - 2, m));
    }
  }
  return p;
}

}  // namespace

std::vector<Complex> spherical_harmonics(int lmax, const Point& x) {
  if (lmax < 0) throw InvalidArgument("lmax must be >= 0");
  const std::vector<double> p = normalized_legendre(lmax, std::cos(x.theta));
  std::vector<Complex> y(static_cast<std::size_t>((lmax + 1) * (lmax + 1)));
  for (int l = 0; l <= lmax; ++l) {
    for (int m = 0; m <= l; ++m) {
      const Complex v = p[static_cast<std::size_t>(l * (l + 1) / 2 + m)] * std::polar(1.0, m * x.phi);
      y[harmonic_index(l, m)] = v;
      if (m > 0) y[harmonic_index(l, -m)] = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(v);
    }
  }
  return y;
}

Complex spherical_harmonic(int l, int m, const Point& x) {
  if (l < 0 || std::abs(m) > l)
    throw InvalidArgument("invalid harmonic indices (l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
  return spherical_harmonics(l, x)[harmonic_index(l, m)];
}

}  // namespace csq
