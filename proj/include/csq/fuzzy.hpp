#pragma once

// The (L+1)-dimensional fuzzy sphere built from coherent states.
//
// Basis functions, for row index k = L/2 + i with i = -L/2, ..., L/2:
//   Theta_k(theta, phi) = sqrt(binom(L, k)) cos^{L-k}(theta/2) sin^k(theta/2) e^{-i k phi}.
// They are orthogonal under mu with squared norm 1/(L+1) and
// sum_k |Theta_k|^2 = 1, so the frame family is sqrt(L+1) Theta_k with
// constant weight N = L+1. Quantization therefore reads
//   [A_f]_{jk} = (L+1) integral f Theta_j conj(Theta_k) dmu.
//
// Spin matrices use the descending ordering row k <-> m = L/2 - k. The complex
// conjugate of a Theta-basis operator for a real f is its expression in that
// spin basis; `to_spin_basis` applies this relabeling.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csq/frames.hpp"
#include "csq/observables.hpp"
#include "csq/operator.hpp"

namespace csq {

class ThetaBasis {
 public:
  explicit ThetaBasis(int L);

  int L() const { return L_; }
  std::size_t size() const { return static_cast<std::size_t>(L_) + 1; }
  /// Half-integer label i = k - L/2 of row k.
  double label(std::size_t k) const { return static_cast<double>(k) - 0.5 * L_; }

  Complex operator()(std::size_t k, const Point& x) const;
  void evaluate_all(const Point& x, std::span<Complex> out) const;

 private:
  int L_;
  std::vector<double> sqrt_binomial_;
};

/// Spin-L/2 irreducible representation, rows ordered by descending m.
struct SpinMatrices {
  int L = 0;
  std::array<ComplexMatrix, 3> j;

  static SpinMatrices build(int L);
  /// max over (a, b) of |[J_a, J_b] - i eps_abc J_c|.
  double commutation_residual() const;
  /// max |J1^2 + J2^2 + J3^2 - (L/2)(L/2 + 1) Id|.
  double casimir_residual() const;
};

class FuzzySphere {
 public:
  static constexpr double kIdentityTolerance = 1e-10;
  static constexpr double kSpinTolerance = 1e-12;

  /// Verifies orthonormality, the resolution of the identity and the spin
  /// algebra; throws on L < 0 or r <= 0.
  FuzzySphere(int L, double radius = 1.0);

  int L() const { return L_; }
  std::size_t dim() const { return static_cast<std::size_t>(L_) + 1; }
  double radius() const { return radius_; }
  /// 2r / sqrt(L^2 + 2L); undefined for L = 0.
  std::optional<double> kappa() const;

  const ThetaBasis& theta_basis() const { return theta_; }
  const CoherentFrame& frame() const { return frame_; }
  const SpinMatrices& spin() const { return spin_; }

  double identity_residual() const { return identity_residual_; }
  /// max_k |integral |Theta_k|^2 dmu - 1/(L+1)|.
  double theta_norm_residual() const { return theta_norm_residual_; }

 private:
  int L_;
  double radius_;
  ThetaBasis theta_;
  CoherentFrame frame_;
  SpinMatrices spin_;
  double identity_residual_ = 0.0;
  double theta_norm_residual_ = 0.0;
};

FuzzySphere build_fuzzy(int L, double radius = 1.0);

/// A_f in the Theta basis (row k <-> label k - L/2).
ComplexMatrix quantize_fuzzy(const FuzzySphere& fs, const ClassicalObservable& f, const AdaptiveOptions& options = {});

/// Complex conjugation: Theta basis -> spin basis for operators of real f.
ComplexMatrix to_spin_basis(const ComplexMatrix& theta_basis_operator);

/// C[l][m][i][j] = integral Y_l^m conj(Theta_i) Theta_j dmu for 0 <= l <= L.
class CoefficientTensor {
 public:
  CoefficientTensor(int L, std::vector<Complex> entries);

  int L() const { return L_; }
  std::size_t dim() const { return static_cast<std::size_t>(L_) + 1; }
  Complex operator()(int l, int m, std::size_t i, std::size_t j) const;

 private:
  std::size_t offset(int l, int m, std::size_t i, std::size_t j) const;
  int L_;
  std::vector<Complex> entries_;
};

CoefficientTensor coefficient_tensor(const FuzzySphere& fs);

/// F_ij = sum_{l <= L, m} f_lm C[l][m][i][j]. Terms with l > L contribute
/// nothing to the quantized operator and are ignored. quantize_fuzzy of the
/// same harmonic sum equals (L+1) F^T.
ComplexMatrix contract(const CoefficientTensor& tensor, std::span<const observables::HarmonicTerm> terms);

struct YhatBasis {
  /// [Yhat_l^m]_ij = C[l][m][i][j], ordered by harmonic index.
  std::vector<ComplexMatrix> matrices;
  std::vector<std::pair<int, int>> labels;
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
};

/// The (L+1)^2 quantized harmonics. Throws RankDeficientError if they are
/// numerically dependent.
YhatBasis yhat_basis(const CoefficientTensor& tensor);

/// Frobenius norm of A_{Y_l^m}.
double truncation_check(const FuzzySphere& fs, int l, int m);

struct MadoreReport {
  /// Fitted scale in quantize(x^a) = lambda_a J_a (spin basis).
  std::array<double, 3> lambda{};
  /// max_a |quantize(x^a) - lambda_a J_a|.
  double residual = 0.0;
  std::optional<double> kappa;
  /// sum_a quantize(x^a)^2 = multiple * Id.
  double radius_multiple = 0.0;
  double radius_residual = 0.0;
};

MadoreReport madore_compare(const FuzzySphere& fs);

/// Flat CSV with header l,m,i,j,re,im; i and j are the half-integer labels.
void write_tensor_csv(std::ostream& os, const CoefficientTensor& tensor);
/// {"L": L, "re": [l][m+l][row][col], "im": ...}
void write_tensor_json(std::ostream& os, const CoefficientTensor& tensor);

}  // namespace csq
