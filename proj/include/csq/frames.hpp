#pragma once

// Orthonormal families, coherent states and reproducing kernels.
//
// For a family {phi_i} orthonormal under mu, the coherent state at x is
//   |x>_i = phi_i(x) / sqrt(N(x)),   N(x) = sum_i |phi_i(x)|^2,
// so <x|x> = 1 and the resolution of the identity carries the weight N:
//   integral N(x) |x><x| dmu = Id.
// Components are not conjugated, so the functions reproduced by the kernel
// are the span of conj(|x>_i).

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csq/operator.hpp"
#include "csq/quad.hpp"

namespace csq {

using FamilyFunction = std::function<Complex(const Point&)>;

class OrthoFamily {
 public:
  static constexpr double kGramTolerance = 1e-8;

  /// `pair_degree` is the largest trigonometric degree of any product
  /// conj(phi_i) phi_j; it selects the rule used for the Gram check.
  /// Throws NotOrthonormalError if the Gram residual exceeds kGramTolerance.
  OrthoFamily(Domain domain, std::vector<FamilyFunction> functions, std::vector<std::string> labels,
              int pair_degree);

  const Domain& domain() const { return domain_; }
  std::size_t size() const { return functions_.size(); }
  int pair_degree() const { return pair_degree_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double gram_residual() const { return gram_residual_; }

  Complex evaluate(std::size_t i, const Point& x) const { return functions_.at(i)(x); }
  void evaluate_all(const Point& x, std::span<Complex> out) const;
  /// N(x)
  double weight(const Point& x) const;

 private:
  Domain domain_;
  std::vector<FamilyFunction> functions_;
  std::vector<std::string> labels_;
  int pair_degree_;
  double gram_residual_ = 0.0;
};

class CoherentFrame {
 public:
  /// Throws DegeneratePointError if N vanishes at a node of the identity rule.
  explicit CoherentFrame(OrthoFamily family);

  const OrthoFamily& family() const { return family_; }
  const Domain& domain() const { return family_.domain(); }
  std::size_t dim() const { return family_.size(); }

  /// Normalized state; throws DegeneratePointError where N(x) = 0.
  std::vector<Complex> state(const Point& x) const;
  void state(const Point& x, std::span<Complex> out) const;
  double weight(const Point& x) const { return family_.weight(x); }

  /// A rule exact for every product conj(phi_i) phi_j times a degree-`extra`
  /// trig polynomial.
  QuadratureRule rule(int extra = 0) const;

 private:
  OrthoFamily family_;
};

CoherentFrame make_frame(OrthoFamily family);

/// max-norm of integral N(x)|x><x| dmu - Id.
double check_identity(const CoherentFrame& frame, const QuadratureRule& rule);

/// K(x, y) = <x|y>.
class Kernel {
 public:
  explicit Kernel(CoherentFrame frame) : frame_(std::move(frame)) {}
  Complex operator()(const Point& x, const Point& y) const;

 private:
  CoherentFrame frame_;
};

Kernel kernel(const CoherentFrame& frame);

/// x -> integral N(y) K(x, y) Psi(y) dmu(y).
std::function<Complex(const Point&)> reproduce(const CoherentFrame& frame, const QuadratureRule& rule,
                                               std::function<Complex(const Point&)> psi);

/// integral N(x) |<x|psi>|^2 dmu, which equals |psi|^2.
double weighted_injection_norm(const CoherentFrame& frame, const QuadratureRule& rule,
                               std::span<const Complex> psi);

}  // namespace csq
