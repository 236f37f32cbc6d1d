#include "csq/frames.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csq {

namespace {

std::string describe(const Point& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(theta=" << x.theta << ", phi=" << x.phi << ")";
  return os.str();
}

}  // namespace

OrthoFamily::OrthoFamily(Domain domain, std::vector<FamilyFunction> functions, std::vector<std::string> labels,
                         int pair_degree)
    : domain_(domain), functions_(std::move(functions)), labels_(std::move(labels)), pair_degree_(pair_degree) {
  if (functions_.empty()) throw InvalidArgument("an orthonormal family needs at least one function");
  if (labels_.size() != functions_.size()) throw InvalidArgument("one label per family function required");
  if (pair_degree_ < 0) throw InvalidArgument("pair_degree must be >= 0");

  const std::size_t n = functions_.size();
  const QuadratureRule rule = build_rule(domain_, pair_degree_);
  const auto gram = integrate(rule, n * n, [&](const Point& x, std::span<Complex> out) {
    std::vector<Complex> v(n);
    evaluate_all(x, v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = std::conj(v[i]) * v[j];
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram_residual_ = std::max(gram_residual_, std::abs(gram[i * n + j] - (i == j ? 1.0 : 0.0)));
  if (!(gram_residual_ <= kGramTolerance))
    throw NotOrthonormalError("family is not orthonormal (Gram residual " + std::to_string(gram_residual_) + ")",
                              gram_residual_);
}

void OrthoFamily::evaluate_all(const Point& x, std::span<Complex> out) const {
  for (std::size_t i = 0; i < functions_.size(); ++i) out[i] = functions_[i](x);
}

double OrthoFamily::weight(const Point& x) const {
  double n = 0.0;
  for (const auto& f : functions_) n += std::norm(f(x));
  return n;
}

CoherentFrame::CoherentFrame(OrthoFamily family) : family_(std::move(family)) {
  const QuadratureRule r = rule();
  for (const Point& x : r.nodes()) {
    const double w = family_.weight(x);
    if (!(w > 0.0) || !std::isfinite(w))
      throw DegeneratePointError("weight N(x) is zero or non-finite at node " + describe(x), x);
  }
}

void CoherentFrame::state(const Point& x, std::span<Complex> out) const {
  family_.evaluate_all(x, out);
  double n = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) n += std::norm(out[i]);
  if (!(n > 0.0) || !std::isfinite(n))
    throw DegeneratePointError("no coherent state at " + describe(x) + ": N(x) = " + std::to_string(n), x);
  const double inv = 1.0 / std::sqrt(n);
  for (std::size_t i = 0; i < dim(); ++i) out[i] *= inv;
}

std::vector<Complex> CoherentFrame::state(const Point& x) const {
  std::vector<Complex> s(dim());
  state(x, s);
  return s;
}

QuadratureRule CoherentFrame::rule(int extra) const {
  return build_rule(domain(), family_.pair_degree() + std::max(extra, 0));
}

CoherentFrame make_frame(OrthoFamily family) { return CoherentFrame(std::move(family)); }

double check_identity(const CoherentFrame& frame, const QuadratureRule& rule) {
  const std::size_t n = frame.dim();
  const auto m = integrate(rule, n * n, [&](const Point& x, std::span<Complex> out) {
    const auto s = frame.state(x);
    const double w = frame.weight(x);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = w * s[i] * std::conj(s[j]);
  });
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r = std::max(r, std::abs(m[i * n + j] - (i == j ? 1.0 : 0.0)));
  return r;
}

Complex Kernel::operator()(const Point& x, const Point& y) const {
  const auto sx = frame_.state(x);
  const auto sy = frame_.state(y);
  Complex k{};
  for (std::size_t i = 0; i < sx.size(); ++i) k += std::conj(sx[i]) * sy[i];
  return k;
}

Kernel kernel(const CoherentFrame& frame) { return Kernel(frame); }

std::function<Complex(const Point&)> reproduce(const CoherentFrame& frame, const QuadratureRule& rule,
                                               std::function<Complex(const Point&)> psi) {
  // integral N(y) <x|y> Psi(y) dmu = sum_i conj(x_i) c_i with c_i = integral N y_i Psi dmu
  const std::size_t n = frame.dim();
  const auto coeffs = integrate(rule, n, [&](const Point& y, std::span<Complex> out) {
    const auto s = frame.state(y);
    const double w = frame.weight(y);
    const Complex p = psi(y);
    for (std::size_t i = 0; i < n; ++i) out[i] = w * s[i] * p;
  });
  return [frame, coeffs](const Point& x) {
    const auto s = frame.state(x);
    Complex v{};
    for (std::size_t i = 0; i < s.size(); ++i) v += std::conj(s[i]) * coeffs[i];
    return v;
  };
}

double weighted_injection_norm(const CoherentFrame& frame, const QuadratureRule& rule,
                               std::span<const Complex> psi) {
  if (psi.size() != frame.dim()) throw DimensionError("vector length differs from frame dimension");
  const std::vector<Complex> v(psi.begin(), psi.end());
  return integrate(rule,
                   [&](const Point& x) {
                     const auto s = frame.state(x);
                     Complex amp{};
                     for (std::size_t i = 0; i < s.size(); ++i) amp += std::conj(s[i]) * v[i];
                     return Complex{frame.weight(x) * std::norm(amp), 0.0};
                   })
      .real();
}

}  // namespace csq
