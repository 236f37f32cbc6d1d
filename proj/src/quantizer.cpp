#include "csq/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

namespace csq {

namespace {

void fill_projector_integrand(const CoherentFrame& frame, const ClassicalObservable& f, const Point& x,
                              std::span<Complex> out) {
  const std::size_t n = frame.dim();
  const auto s = frame.state(x);
  const Complex fw = frame.weight(x) * f(x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = fw * s[i] * std::conj(s[j]);
}

ComplexMatrix to_matrix(const std::vector<Complex>& flat, std::size_t n) {
  ComplexMatrix m(n, n);
  std::copy(flat.begin(), flat.end(), m.data().begin());
  return m;
}

HermitianOperator symmetrize(const ComplexMatrix& m, const ClassicalObservable& f) {
  if (!f.is_real) throw InvalidArgument("quantize: observable '" + f.description + "' is not real; use quantize_general");
  const double asym = m.hermitian_asymmetry();
  if (asym > HermitianOperator::kAsymmetryTolerance)
    std::cerr << "warning: quantized '" << f.description << "' has asymmetry " << asym << "\n";
  return HermitianOperator(m, std::numeric_limits<double>::infinity());
}


}  // namespace

ComplexMatrix quantize_general(const CoherentFrame& frame, const QuadratureRule& rule, const ClassicalObservable& f) {
  if (rule.domain() != frame.domain()) throw InvalidArgument("quadrature rule and frame live on different domains");
  const std::size_t n = frame.dim();
  const auto flat = integrate(rule, n * n, [&](const Point& x, std::span<Complex> out) {
    fill_projector_integrand(frame, f, x, out);
  });
  return to_matrix(flat, n);
}

ComplexMatrix quantize_general(const CoherentFrame& frame, const ClassicalObservable& f,
                               const AdaptiveOptions& options) {
  if (f.degree) return quantize_general(frame, frame.rule(*f.degree), f);
  const std::size_t n = frame.dim();
  const auto flat = integrate_adaptive(
      frame.domain(), n * n,
      [&](const Point& x, std::span<Complex> out) { fill_projector_integrand(frame, f, x, out); }, options);
  return to_matrix(flat, n);
}

HermitianOperator quantize(const CoherentFrame& frame, const QuadratureRule& rule, const ClassicalObservable& f) {
  return symmetrize(quantize_general(frame, rule, f), f);
}

HermitianOperator quantize(const CoherentFrame& frame, const ClassicalObservable& f, const AdaptiveOptions& options) {
  return symmetrize(quantize_general(frame, f, options), f);
}

SymbolFunction lower_symbol(const CoherentFrame& frame, const ComplexMatrix& op) {
  if (op.rows() != frame.dim() || op.cols() != frame.dim())
    throw DimensionError("lower_symbol: operator dimension differs from frame dimension");
  return {[frame, op](const Point& x) {
            const auto s = frame.state(x);
            Complex v{};
            for (std::size_t i = 0; i < s.size(); ++i) {
              Complex row{};
              for (std::size_t j = 0; j < s.size(); ++j) row += op(i, j) * s[j];
              v += std::conj(s[i]) * row;
            }
            return v;
          },
          SymbolKind::Lower};
}

UpperSymbol upper_symbol(const CoherentFrame& frame, const ComplexMatrix& op,
                         std::span<const ClassicalObservable> basis, double tolerance) {
  if (op.rows() != frame.dim() || op.cols() != frame.dim())
    throw DimensionError("upper_symbol: operator dimension differs from frame dimension");
  if (basis.empty()) throw UnrepresentableError("upper_symbol: empty candidate basis", op.max_abs());

  const std::size_t k = basis.size();
  std::vector<ComplexMatrix> q;
  q.reserve(k);
  for (const auto& b : basis) q.push_back(quantize_general(frame, b));

  // Normal equations G c = r, G_ab = <Q_a, Q_b>, r_a = <Q_a, O>.
  ComplexMatrix gram(k, k);
  std::vector<Complex> rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    rhs[a] = hs_inner(q[a], op);
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = hs_inner(q[a], q[b]);
  }
  const Spectrum spec = eig(HermitianOperator(gram, 1e-9 * std::max(1.0, gram.max_abs())));
  const double top = spec.eigenvalues.empty() ? 0.0 : std::abs(spec.eigenvalues.back());
  const double cutoff = 1e-12 * std::max(top, 1e-300);

  UpperSymbol out;
  out.coefficients.assign(k, Complex{});
  std::size_t rank = 0;
  for (std::size_t e = 0; e < k; ++e) {
    const double lambda = spec.eigenvalues[e];
    if (lambda <= cutoff) continue;
    ++rank;
    Complex proj{};
    for (std::size_t a = 0; a < k; ++a) proj += std::conj(spec.eigenvectors(a, e)) * rhs[a];
    for (std::size_t a = 0; a < k; ++a) out.coefficients[a] += spec.eigenvectors(a, e) * proj / lambda;
  }
  out.non_unique = rank < k;

  ComplexMatrix rebuilt(frame.dim(), frame.dim());
  for (std::size_t a = 0; a < k; ++a) rebuilt += out.coefficients[a] * q[a];
  out.residual = max_abs_diff(rebuilt, op);
  if (!(out.residual <= tolerance))
    throw UnrepresentableError("operator has no upper symbol in the supplied basis (residual " +
                                   std::to_string(out.residual) + ")",
                               out.residual);

  std::vector<ClassicalObservable> kept(basis.begin(), basis.end());
  out.symbol = {[kept, c = out.coefficients](const Point& x) {
                  Complex v{};
                  for (std::size_t a = 0; a < kept.size(); ++a) v += c[a] * kept[a](x);
                  return v;
                },
                SymbolKind::Upper};
  return out;
}

double BerezinLiebBounds::slack() const { return std::min(trace - lower, upper - trace); }

BerezinLiebBounds berezin_lieb_check(const CoherentFrame& frame, const HermitianOperator& op,
                                     const SymbolFunction& upper, const std::function<double(double)>& g,
                                     const AdaptiveOptions& options) {
  if (op.dim() != frame.dim()) throw DimensionError("berezin_lieb_check: dimension mismatch");
  const SymbolFunction lower = lower_symbol(frame, op.matrix());
  const auto v = integrate_adaptive(
      frame.domain(), 4,
      [&](const Point& x, std::span<Complex> out) {
        const double w = frame.weight(x);
        const double gl = g(lower(x).real());
        const double gu = g(upper(x).real());
        out[0] = w * gl;
        out[1] = w * gu;
        out[2] = gl;
        out[3] = gu;
      },
      options);
  BerezinLiebBounds b;
  b.lower = v[0].real();
  b.upper = v[1].real();
  b.lower_unweighted = v[2].real();
  b.upper_unweighted = v[3].real();
  b.trace = trace_of_function(op, g);
  return b;
}

BerezinLiebBounds berezin_lieb_check(const CoherentFrame& frame, const HermitianOperator& op,
                                     std::span<const ClassicalObservable> basis,
                                     const std::function<double(double)>& g, const AdaptiveOptions& options) {
  const UpperSymbol up = upper_symbol(frame, op.matrix(), basis);
  return berezin_lieb_check(frame, op, up.symbol, g, options);
}

}  // namespace csq
