#include "csq/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "csq/harmonics.hpp"
#include "csq/json_out.hpp"
#include "csq/quantizer.hpp"

namespace csq {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

std::string label_string(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

OrthoFamily fuzzy_family(const ThetaBasis& theta) {
  const double scale = std::sqrt(static_cast<double>(theta.size()));
  std::vector<FamilyFunction> fns;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    fns.push_back([theta, k, scale](const Point& x) { return scale * theta(k, x); });
    labels.push_back("i=" + label_string(theta.label(k)));
  }
  return OrthoFamily(Domain::sphere(), std::move(fns), std::move(labels), theta.L());
}

}  // namespace

ThetaBasis::ThetaBasis(int L) : L_(L) {
  if (L < 0) throw InvalidArgument("fuzzy sphere order L must be >= 0");
  for (int k = 0; k <= L; ++k) sqrt_binomial_.push_back(std::sqrt(binomial(L, k)));
}

Complex ThetaBasis::operator()(std::size_t k, const Point& x) const {
  const double c = std::cos(0.5 * x.theta);
  const double s = std::sin(0.5 * x.theta);
  const int kk = static_cast<int>(k);
  return sqrt_binomial_.at(k) * std::pow(c, L_ - kk) * std::pow(s, kk) * std::polar(1.0, -kk * x.phi);
}

void ThetaBasis::evaluate_all(const Point& x, std::span<Complex> out) const {
  for (std::size_t k = 0; k < size(); ++k) out[k] = (*this)(k, x);
}

SpinMatrices SpinMatrices::build(int L) {
  if (L < 0) throw InvalidArgument("spin representation order L must be >= 0");
  const auto n = static_cast<std::size_t>(L) + 1;
  const double j = 0.5 * L;
  ComplexMatrix jp(n, n), jm(n, n), j3(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double m = j - static_cast<double>(k);
    j3(k, k) = m;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits one row up.
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  jm = jp.adjoint();
  SpinMatrices s;
  s.L = L;
  s.j[0] = 0.5 * (jp + jm);
  s.j[1] = Complex{0.0, -0.5} * (jp - jm);
  s.j[2] = j3;
  return s;
}

double SpinMatrices::commutation_residual() const {
  double r = 0.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(c);
    r = std::max(r, max_abs_diff(commutator(j[ua], j[ub]), Complex{0.0, 1.0} * j[uc]));
  }
  return r;
}

double SpinMatrices::casimir_residual() const {
  const double jj = 0.5 * L * (0.5 * L + 1.0);
  const ComplexMatrix c = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
  return max_abs_diff(c, jj * ComplexMatrix::identity(c.rows()));
}

FuzzySphere::FuzzySphere(int L, double radius)
    : L_(L), radius_(radius), theta_(L), frame_(fuzzy_family(theta_)), spin_(SpinMatrices::build(L)) {
  if (!(radius > 0.0)) throw InvalidArgument("fuzzy sphere radius must be positive");
  const QuadratureRule rule = frame_.rule();
  identity_residual_ = check_identity(frame_, rule);
  if (!(identity_residual_ < kIdentityTolerance))
    throw NumericalError("fuzzy frame violates the resolution of the identity (residual " +
                         std::to_string(identity_residual_) + ")");
  const double target = 1.0 / static_cast<double>(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const double norm2 = integrate(rule, [&](const Point& x) { return Complex{std::norm(theta_(k, x)), 0.0}; }).real();
    theta_norm_residual_ = std::max(theta_norm_residual_, std::abs(norm2 - target));
  }
  if (spin_.commutation_residual() > kSpinTolerance || spin_.casimir_residual() > kSpinTolerance)
    throw NumericalError("spin matrices violate the su(2) relations");
}

std::optional<double> FuzzySphere::kappa() const {
  if (L_ == 0) return std::nullopt;
  return 2.0 * radius_ / std::sqrt(static_cast<double>(L_ * L_ + 2 * L_));
}

FuzzySphere build_fuzzy(int L, double radius) { return FuzzySphere(L, radius); }

ComplexMatrix quantize_fuzzy(const FuzzySphere& fs, const ClassicalObservable& f, const AdaptiveOptions& options) {
  ComplexMatrix a = quantize_general(fs.frame(), f, options);
  if (f.is_real) a = HermitianOperator(a, std::numeric_limits<double>::infinity()).matrix();
  return a;
}

ComplexMatrix to_spin_basis(const ComplexMatrix& theta_basis_operator) { return theta_basis_operator.conj(); }

CoefficientTensor::CoefficientTensor(int L, std::vector<Complex> entries) : L_(L), entries_(std::move(entries)) {
  const std::size_t n = dim();
  if (entries_.size() != static_cast<std::size_t>((L + 1) * (L + 1)) * n * n)
    throw DimensionError("coefficient tensor has the wrong number of entries");
}

std::size_t CoefficientTensor::offset(int l, int m, std::size_t i, std::size_t j) const {
  if (l < 0 || l > L_ || std::abs(m) > l || i >= dim() || j >= dim())
    throw InvalidArgument("coefficient tensor index out of range");
  return (harmonic_index(l, m) * dim() + i) * dim() + j;
}

Complex CoefficientTensor::operator()(int l, int m, std::size_t i, std::size_t j) const {
  return entries_[offset(l, m, i, j)];
}

CoefficientTensor coefficient_tensor(const FuzzySphere& fs) {
  const int L = fs.L();
  const std::size_t n = fs.dim();
  const std::size_t harmonics = static_cast<std::size_t>((L + 1) * (L + 1));
  // Y (degree L) times conj(Theta) Theta (degree L): exact at degree 2L.
  const QuadratureRule rule = build_rule(Domain::sphere(), 2 * L);
  std::vector<Complex> c(harmonics * n * n);
  std::vector<Complex> th(n);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const auto y = spherical_harmonics(L, nodes[q]);
    fs.theta_basis().evaluate_all(nodes[q], th);
    for (std::size_t h = 0; h < harmonics; ++h) {
      const Complex wy = weights[q] * y[h];
      for (std::size_t i = 0; i < n; ++i) {
        const Complex wyi = wy * std::conj(th[i]);
        for (std::size_t j = 0; j < n; ++j) c[(h * n + i) * n + j] += wyi * th[j];
      }
    }
  }
  return CoefficientTensor(L, std::move(c));
}

ComplexMatrix contract(const CoefficientTensor& tensor, std::span<const observables::HarmonicTerm> terms) {
  const std::size_t n = tensor.dim();
  ComplexMatrix f(n, n);
  for (const auto& t : terms) {
    if (t.l < 0 || std::abs(t.m) > t.l) throw InvalidArgument("invalid harmonic indices");
    if (t.l > tensor.L()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j) += t.coefficient * tensor(t.l, t.m, i, j);
  }
  return f;
}

YhatBasis yhat_basis(const CoefficientTensor& tensor) {
  const int L = tensor.L();
  const std::size_t n = tensor.dim();
  YhatBasis out;
  for (int l = 0; l <= L; ++l) {
    for (int m = -l; m <= l; ++m) {
      ComplexMatrix y(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = tensor(l, m, i, j);
      out.matrices.push_back(std::move(y));
      out.labels.emplace_back(l, m);
    }
  }
  // Singular values of the matrix whose columns are the vectorized Yhat.
  const std::size_t count = out.matrices.size();
  ComplexMatrix gram(count, count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) gram(a, b) = hs_inner(out.matrices[a], out.matrices[b]);
  const Spectrum s = eig(HermitianOperator(gram, 1e-12 * std::max(1.0, gram.max_abs())));
  out.smallest_singular_value = std::sqrt(std::max(0.0, s.eigenvalues.front()));
  out.largest_singular_value = std::sqrt(std::max(0.0, s.eigenvalues.back()));
  if (!(out.smallest_singular_value > 1e-12 * out.largest_singular_value))
    throw RankDeficientError("quantized harmonics are linearly dependent", out.smallest_singular_value);
  return out;
}

double truncation_check(const FuzzySphere& fs, int l, int m) {
  if (l < 0 || std::abs(m) > l) throw InvalidArgument("truncation_check requires |m| <= l");
  return quantize_fuzzy(fs, observables::harmonic(l, m)).frobenius_norm();
}

MadoreReport madore_compare(const FuzzySphere& fs) {
  MadoreReport rep;
  rep.kappa = fs.kappa();
  const std::size_t n = fs.dim();
  ComplexMatrix radius(n, n);
  for (int a = 0; a < 3; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    const ComplexMatrix x = to_spin_basis(quantize_fuzzy(fs, observables::coordinate(a + 1)));
    const ComplexMatrix& j = fs.spin().j[ua];
    const double jj = hs_inner(j, j).real();
    rep.lambda[ua] = jj > 0.0 ? hs_inner(j, x).real() / jj : 0.0;
    rep.residual = std::max(rep.residual, max_abs_diff(x, rep.lambda[ua] * j));
    radius += x * x;
  }
  rep.radius_multiple = radius.trace().real() / static_cast<double>(n);
  rep.radius_residual = max_abs_diff(radius, rep.radius_multiple * ComplexMatrix::identity(n));
  return rep;
}

void write_tensor_csv(std::ostream& os, const CoefficientTensor& tensor) {
  const double half = 0.5 * tensor.L();
  os << "l,m,i,j,re,im\n";
  for (int l = 0; l <= tensor.L(); ++l)
    for (int m = -l; m <= l; ++m)
      for (std::size_t i = 0; i < tensor.dim(); ++i)
        for (std::size_t j = 0; j < tensor.dim(); ++j) {
          const Complex c = tensor(l, m, i, j);
          os << l << ',' << m << ',' << label_string(static_cast<double>(i) - half) << ','
             << label_string(static_cast<double>(j) - half) << ',' << json::format_number(c.real()) << ','
             << json::format_number(c.imag()) << '\n';
        }
}

void write_tensor_json(std::ostream& os, const CoefficientTensor& tensor) {
  json::Json re = json::Json::array();
  json::Json im = json::Json::array();
  for (int l = 0; l <= tensor.L(); ++l) {
    json::Json rl = json::Json::array(), il = json::Json::array();
    for (int m = -l; m <= l; ++m) {
      json::Json rm = json::Json::array(), imm = json::Json::array();
      for (std::size_t i = 0; i < tensor.dim(); ++i) {
        json::Json ri = json::Json::array(), ii = json::Json::array();
        for (std::size_t j = 0; j < tensor.dim(); ++j) {
          ri.push_back(tensor(l, m, i, j).real());
          ii.push_back(tensor(l, m, i, j).imag());
        }
        rm.push_back(std::move(ri));
        imm.push_back(std::move(ii));
      }
      rl.push_back(std::move(rm));
      il.push_back(std::move(imm));
    }
    re.push_back(std::move(rl));
    im.push_back(std::move(il));
  }
  json::Json doc;
  doc["L"] = tensor.L();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  json::write(os, doc);
}

}  // namespace csq
