#pragma once

// Quadrature on the circle (measure dtheta/pi) and the 2-sphere
// (measure sin(theta) dtheta dphi / 4pi).

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "csq/error.hpp"

namespace csq {

enum class DomainKind { Circle, Sphere };

struct Domain {
  DomainKind kind = DomainKind::Sphere;
  /// Total mass of the measure.
  double measure_normalization = 1.0;

  /// theta in [0, 2pi), measure dtheta/pi, total mass 2.
  static Domain circle() { return {DomainKind::Circle, 2.0}; }
  /// (theta, phi) in [0, pi] x [0, 2pi), measure sin(theta) dtheta dphi / 4pi, total mass 1.
  static Domain sphere() { return {DomainKind::Sphere, 1.0}; }

  friend bool operator==(const Domain&, const Domain&) = default;
};

using ScalarField = std::function<Complex(const Point&)>;
/// Writes the integrand's components at a point into the output span.
using VectorField = std::function<void(const Point&, std::span<Complex>)>;

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n);

/// A positive-weight rule integrating every trigonometric polynomial of degree
/// <= exact_degree exactly.
///
/// Sphere rules are Gauss-Legendre in u = cos(theta) times a uniform phi grid
/// offset by half a step, so phi = 0 falls in the gap between two nodes.
/// Circle rules are the same offset uniform grid in theta.
class QuadratureRule {
 public:
  QuadratureRule(Domain domain, std::vector<Point> nodes, std::vector<double> weights, int exact_degree);

  const Domain& domain() const { return domain_; }
  std::span<const Point> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  int exact_degree() const { return exact_degree_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  Domain domain_;
  std::vector<Point> nodes_;
  std::vector<double> weights_;
  int exact_degree_;
};

/// Hard cap on the number of nodes in any rule.
inline constexpr std::size_t kMaxRuleNodes = std::size_t{1} << 26;

/// Rule with exact_degree >= degree. Sphere: ceil((degree+2)/2) Gauss nodes in u
/// and degree+1 phi nodes. Circle: degree+1 uniform nodes.
QuadratureRule build_rule(Domain domain, int degree);

/// sum_k w_k f(x_k). Throws EvaluationError at the first non-finite value.
Complex integrate(const QuadratureRule& rule, const ScalarField& f);
std::vector<Complex> integrate(const QuadratureRule& rule, std::size_t components, const VectorField& f);

struct AdaptiveOptions {
  double tol = 1e-10;
  int max_doublings = 20;
  /// Gauss nodes per axis on the first pass.
  std::size_t initial_nodes = 16;
};

/// Integrates by node doubling until two successive results differ by < tol in
/// max norm. The grids are Gauss-Legendre in theta (and in phi over [0, 2pi] on
/// the sphere), so integrands that are smooth in the angles but not in cos(theta),
/// or that jump at phi = 0, still converge geometrically.
Complex integrate_adaptive(Domain domain, const ScalarField& f, const AdaptiveOptions& options = {});
std::vector<Complex> integrate_adaptive(Domain domain, std::size_t components, const VectorField& f,
                                        const AdaptiveOptions& options = {});

}  // namespace csq
