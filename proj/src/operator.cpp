#include "csq/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace csq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_asymmetry() const {
  if (!is_square()) throw DimensionError("hermitian_asymmetry of a non-square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}
}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  Complex s{0.0, 0.0};
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::conj(a.data()[k]) * b.data()[k];
  return s;
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tolerance) {
  if (!m.is_square()) throw DimensionError("HermitianOperator requires a square matrix");
  const double asym = m.hermitian_asymmetry();
  if (!(asym <= tolerance))
    throw NotHermitianError("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")", asym);
  m_ = m;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

ComplexMatrix Spectrum::reconstruct() const {
  const ComplexMatrix lambda = ComplexMatrix::diagonal(eigenvalues);
  return eigenvectors * lambda * eigenvectors.adjoint();
}

Spectrum eig(const HermitianOperator& op, int max_sweeps) {
  const std::size_t n = op.dim();
  ComplexMatrix a = op.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };
  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());

  int sweep = 0;
  while (off_norm() > 1e-15 * scale) {
    if (sweep++ >= max_sweeps)
      throw NumericalError("Jacobi eigensolver did not converge after " + std::to_string(max_sweeps) +
                           " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real rotation on the phase-rotated 2x2 block [[app, g], [g, aqq]].
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex j_pp = c;
        const Complex j_pq = s;
        const Complex j_qp = -s * std::conj(phase);
        const Complex j_qq = c * std::conj(phase);

        // A <- A J (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * j_pp + akq * j_qp;
          a(k, q) = akp * j_pq + akq * j_qq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * j_pp + vkq * j_qp;
          v(k, q) = vkp * j_pq + vkq * j_qq;
        }
        // A <- J^dagger A (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(j_pp) * apk + std::conj(j_qp) * aqk;
          a(q, k) = std::conj(j_pq) * apk + std::conj(j_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  Spectrum out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("commutator: operands must be square with equal dimensions");
  return a * b - b * a;
}

ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b) {
  ComplexMatrix c = commutator(a.matrix(), b.matrix());
  // anti-Hermitian: C + C^dagger = 0
  const double resid = (c + c.adjoint()).max_abs();
  const double scale = std::max(1.0, a.matrix().max_abs() * b.matrix().max_abs());
  if (resid > 1e-10 * scale)
    throw NumericalError("commutator of Hermitian operators is not anti-Hermitian (residual " +
                         std::to_string(resid) + ")");
  return c;
}

HermitianOperator apply_function(const HermitianOperator& a, const std::function<double(double)>& g) {
  const Spectrum s = eig(a);
  std::vector<double> mapped(s.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = g(s.eigenvalues[k]);
    if (!std::isfinite(mapped[k]))
      throw NumericalError("spectral function is non-finite at eigenvalue " +
                           std::to_string(s.eigenvalues[k]));
  }
  const ComplexMatrix m = s.eigenvectors * ComplexMatrix::diagonal(mapped) * s.eigenvectors.adjoint();
  return HermitianOperator(m, 1e-8 * std::max(1.0, m.max_abs()));
}

double trace_of_function(const HermitianOperator& a, const std::function<double(double)>& g) {
  const Spectrum s = eig(a);
  double t = 0.0;
  for (double lambda : s.eigenvalues) {
    const double gv = g(lambda);
    if (!std::isfinite(gv))
      throw NumericalError("spectral function is non-finite at eigenvalue " + std::to_string(lambda));
    t += gv;
  }
  return t;
}

const ComplexMatrix& pauli(int k) {
  static const std::array<ComplexMatrix, 4> sigma = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (k < 0 || k > 3) throw InvalidArgument("pauli index must be in 0..3");
  return sigma[static_cast<std::size_t>(k)];
}

std::array<Complex, 4> pauli_decompose(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("pauli_decompose expects a 2x2 matrix");
  std::array<Complex, 4> c{};
  // sigma_k is Hermitian and Tr(sigma_j sigma_k) = 2 delta_jk
  for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = 0.5 * hs_inner(pauli(k), a);
  return c;
}

}  // namespace csq
