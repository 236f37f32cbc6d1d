#include "csq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace csq {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const Point& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(theta=" << x.theta << ", phi=" << x.phi << ")";
  return os.str();
}

void check_finite(Complex v, const Point& x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw EvaluationError("integrand is non-finite at node " + describe(x), x);
}

// Offset uniform grid on [0, 2pi): (k + 1/2) * 2pi / m.
std::vector<double> offset_uniform(std::size_t m) {
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = (static_cast<double>(k) + 0.5) * 2.0 * kPi / static_cast<double>(m);
  return out;
}

struct Grid {
  std::vector<Point> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre in theta on [0, pi] (and phi on [0, 2pi] for the sphere).
Grid angular_gauss_grid(Domain domain, std::size_t n) {
  auto [x, w] = gauss_legendre(n);
  Grid g;
  if (domain.kind == DomainKind::Circle) {
    g.nodes.reserve(n);
    g.weights.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      g.nodes.push_back({kPi * (x[k] + 1.0), 0.0});
      g.weights.push_back(w[k]);  // (pi dx) / pi
    }
    return g;
  }
  if (n * n > kMaxRuleNodes) throw CapacityError("adaptive sphere grid exceeds node limit");
  g.nodes.reserve(n * n);
  g.weights.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const double theta = 0.5 * kPi * (x[a] + 1.0);
    const double wt = 0.5 * kPi * w[a] * std::sin(theta);
    for (std::size_t b = 0; b < n; ++b) {
      const double phi = kPi * (x[b] + 1.0);
      const double wp = kPi * w[b];
      g.nodes.push_back({theta, phi});
      g.weights.push_back(wt * wp / (4.0 * kPi));
    }
  }
  return g;
}

void accumulate(std::span<const Point> nodes, std::span<const double> weights, std::size_t components,
                const VectorField& f, std::vector<Complex>& sum) {
  sum.assign(components, Complex{});
  std::vector<Complex> value(components);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::fill(value.begin(), value.end(), Complex{});
    f(nodes[k], value);
    for (std::size_t c = 0; c < components; ++c) {
      check_finite(value[c], nodes[k]);
      sum[c] += weights[k] * value[c];
    }
  }
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n) {
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
             static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    if (n % 2 == 1 && i == n / 2) z = 0.0;
    // recompute the derivative at the converged root
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
           static_cast<double>(j);
    }
    dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

QuadratureRule::QuadratureRule(Domain domain, std::vector<Point> nodes, std::vector<double> weights,
                               int exact_degree)
    : domain_(domain), nodes_(std::move(nodes)), weights_(std::move(weights)), exact_degree_(exact_degree) {
  if (nodes_.size() != weights_.size()) throw DimensionError("rule nodes and weights differ in length");
}

QuadratureRule build_rule(Domain domain, int degree) {
  if (degree < 0) throw InvalidArgument("quadrature degree must be >= 0");
  const auto m = static_cast<std::size_t>(degree) + 1;
  if (domain.kind == DomainKind::Circle) {
    if (m > kMaxRuleNodes) throw CapacityError("circle rule of degree " + std::to_string(degree) + " exceeds node limit");
    std::vector<Point> nodes;
    nodes.reserve(m);
    for (double t : offset_uniform(m)) nodes.push_back({t, 0.0});
    std::vector<double> weights(m, domain.measure_normalization / static_cast<double>(m));
    return QuadratureRule(domain, std::move(nodes), std::move(weights), degree);
  }

  const auto nu = static_cast<std::size_t>((degree + 3) / 2);  // ceil((degree + 2) / 2)
  if (nu > kMaxRuleNodes / m) throw CapacityError("sphere rule of degree " + std::to_string(degree) + " exceeds node limit");
  auto [u, wu] = gauss_legendre(nu);
  const std::vector<double> phis = offset_uniform(m);
  std::vector<Point> nodes;
  std::vector<double> weights;
  nodes.reserve(nu * m);
  weights.reserve(nu * m);
  for (std::size_t a = 0; a < nu; ++a) {
    const double theta = std::acos(std::clamp(u[a], -1.0, 1.0));
    for (double phi : phis) {
      nodes.push_back({theta, phi});
      // (du/2) (dphi / 2pi)
      weights.push_back(0.5 * wu[a] / static_cast<double>(m));
    }
  }
  return QuadratureRule(domain, std::move(nodes), std::move(weights), degree);
}

Complex integrate(const QuadratureRule& rule, const ScalarField& f) {
  Complex sum{};
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Complex v = f(nodes[k]);
    check_finite(v, nodes[k]);
    sum += weights[k] * v;
  }
  return sum;
}

std::vector<Complex> integrate(const QuadratureRule& rule, std::size_t components, const VectorField& f) {
  std::vector<Complex> sum;
  accumulate(rule.nodes(), rule.weights(), components, f, sum);
  return sum;
}

std::vector<Complex> integrate_adaptive(Domain domain, std::size_t components, const VectorField& f,
                                        const AdaptiveOptions& options) {
  if (!(options.tol > 0.0)) throw InvalidArgument("adaptive tolerance must be positive");
  std::size_t n = std::max<std::size_t>(options.initial_nodes, 1);
  std::vector<Complex> previous;
  {
    const Grid g = angular_gauss_grid(domain, n);
    accumulate(g.nodes, g.weights, components, f, previous);
  }
  std::vector<Complex> older;
  std::vector<Complex> current;
  for (int d = 0; d < options.max_doublings; ++d) {
    n *= 2;
    Grid g;
    try {
      g = angular_gauss_grid(domain, n);
    } catch (const CapacityError&) {
      break;
    }
    accumulate(g.nodes, g.weights, components, f, current);
    double diff = 0.0;
    for (std::size_t c = 0; c < components; ++c) diff = std::max(diff, std::abs(current[c] - previous[c]));
    if (diff < options.tol) return current;
    older = previous;
    previous = current;
  }
  throw ConvergenceError("adaptive quadrature did not reach tolerance after " +
                             std::to_string(options.max_doublings) + " doublings",
                         std::move(older), std::move(previous));
}

Complex integrate_adaptive(Domain domain, const ScalarField& f, const AdaptiveOptions& options) {
  const auto v = integrate_adaptive(
      domain, 1, [&](const Point& x, std::span<Complex> out) { out[0] = f(x); }, options);
  return v[0];
}

}  // namespace csq
