#pragma once

// Spherical harmonics normalized against the unit-mass sphere measure:
// integral of |Y_l^m|^2 dmu = 1 (i.e. sqrt(4 pi) times the usual convention).
// Condon-Shortley phase, Y_l^{-m} = (-1)^m conj(Y_l^m).

#include <cstddef>
#include <vector>

#include "csq/error.hpp"

namespace csq {

/// Flat index of (l, m) in the table produced by `spherical_harmonics`.
constexpr std::size_t harmonic_index(int l, int m) {
  return static_cast<std::size_t>(l * l + l + m);
}

/// Y_l^m at x. Requires l >= 0 and |m| <= l.
Complex spherical_harmonic(int l, int m, const Point& x);

/// All Y_l^m with l <= lmax, laid out by `harmonic_index`.
std::vector<Complex> spherical_harmonics(int lmax, const Point& x);

}  // namespace csq
