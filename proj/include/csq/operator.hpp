#pragma once

// Dense complex matrices, Hermitian operators and their spectral calculus.

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "csq/error.hpp"

namespace csq {

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;
  /// max |A_ij - conj(A_ji)|.
  double hermitian_asymmetry() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// max_ij |A_ij - B_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// A Hermitian matrix. Hermiticity is checked at construction and the stored
/// entries are exactly Hermitian afterwards.
class HermitianOperator {
 public:
  static constexpr double kAsymmetryTolerance = 1e-10;

  /// Symmetrizes `m` after rejecting it if the asymmetry exceeds `tolerance`.
  explicit HermitianOperator(const ComplexMatrix& m, double tolerance = kAsymmetryTolerance);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

/// Eigenvalues in ascending order; eigenvectors are the matching columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi eigendecomposition.
Spectrum eig(const HermitianOperator& a, int max_sweeps = 100);

/// A B - B A.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// Same as above, additionally asserting the result is anti-Hermitian.
ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b);

/// V g(Lambda) V^dagger. Throws NumericalError if g is non-finite on the spectrum.
HermitianOperator apply_function(const HermitianOperator& a, const std::function<double(double)>& g);

/// Tr g(A).
double trace_of_function(const HermitianOperator& a, const std::function<double(double)>& g);

/// sigma_0 (identity) and the three Pauli matrices.
const ComplexMatrix& pauli(int k);

/// Coefficients c_k of A = sum_k c_k sigma_k for a 2x2 matrix.
std::array<Complex, 4> pauli_decompose(const ComplexMatrix& a);

}  // namespace csq
