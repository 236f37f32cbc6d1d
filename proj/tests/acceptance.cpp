// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "csq/fuzzy.hpp"
#include "csq/model_circle.hpp"
#include "csq/model_sphere.hpp"
#include "csq/quantizer.hpp"
#include "csq/verify.hpp"

using namespace csq;
using std::numbers::pi;

namespace {

const Complex I(0.0, 1.0);

// Collects sub-checks for one criterion; the criterion passes when all do.
class Criterion {
 public:
  void at_most(const std::string& what, double value, double tol) { add(what, value, "<=", tol, value <= tol); }
  void at_least(const std::string& what, double value, double tol) { add(what, value, ">=", tol, value >= tol); }
  void require(const std::string& what, bool ok) {
    if (!ok) failures_.push_back(what);
    ++count_;
  }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    if (failures_.empty()) return std::to_string(count_) + " checks";
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  void add(const std::string& what, double value, const char* op, double tol, bool ok) {
    ++count_;
    if (ok) return;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s = %.6e, needs %s %.1e", what.c_str(), value, op, tol);
    failures_.push_back(buf);
  }
  std::vector<std::string> failures_;
  int count_ = 0;
};

double sq(double t) { return t * t; }
double quartic(double t) { return t * t * t * t; }
double expo(double t) { return std::exp(t); }

Criterion identity() {
  Criterion c;
  c.at_most("circle", CircleModel().identity_residual(), 1e-10);
  c.at_most("sphere", SphereSpinHalfModel().identity_residual(), 1e-10);
  for (int L = 0; L <= 8; ++L) {
    const auto fs = build_fuzzy(L);
    c.at_most("fuzzy L=" + std::to_string(L), check_identity(fs.frame(), fs.frame().rule()), 1e-10);
  }
  return c;
}

Criterion circle_symbols_criterion() {
  Criterion c;
  const CircleModel model;
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double lower_err = 0.0, upper_err = 0.0, round_trip = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(gen), b = u(gen), d = u(gen);
    const auto closed = circle_symbols(a, b, d);
    const auto op = circle_matrix(a, b, d);
    const auto lower = lower_symbol(model.frame(), op);
    const auto upper = upper_symbol(model.frame(), op, CircleModel::symbol_basis());
    for (int k = 0; k < 64; ++k) {
      const Point x{2 * pi * k / 64, 0.0};
      lower_err = std::max(lower_err, std::abs(closed.lower(x) - lower(x)));
      upper_err = std::max(upper_err, std::abs(closed.upper(x) - upper.symbol(x)));
    }
    const auto back = quantize(model.frame(), model.rule(), {closed.upper.evaluate, "upper", true, 2});
    round_trip = std::max(round_trip, max_abs_diff(back.matrix(), op));
  }
  c.at_most("lower symbol at 64 angles", lower_err, 1e-10);
  c.at_most("upper symbol at 64 angles", upper_err, 1e-10);
  c.at_most("quantize(upper) vs A, 20 random", round_trip, 1e-10);
  return c;
}

Criterion sphere_golden(const AngleOperators& angles) {
  Criterion c;
  const SphereSpinHalfModel m;
  const ComplexMatrix theta{{3 * pi / 8, 0.0}, {0.0, 5 * pi / 8}};
  const ComplexMatrix phi{{pi, I * pi / 4.0}, {-I * pi / 4.0, pi}};
  c.at_most("A_theta", max_abs_diff(angles.theta.matrix(), theta), 1e-8);
  c.at_most("A_phi", max_abs_diff(angles.phi.matrix(), phi), 1e-8);
  const auto x = m.coordinate_operators();
  for (int k = 0; k < 3; ++k)
    c.at_most("A_x" + std::to_string(k + 1), max_abs_diff(x[k].matrix(), (1.0 / 3.0) * pauli(k + 1)), 1e-10);

  const auto table = m.sigma_symbols();
  double lower = 0.0, upper = 0.0;
  for (const auto& p : m.rule().nodes()) {
    const double xs[4] = {1.0, std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
                          std::cos(p.theta)};
    for (int k = 0; k < 4; ++k) {
      lower = std::max(lower, std::abs(lower_symbol(m.frame(), pauli(k))(p) - xs[k]));
      upper = std::max(upper, std::abs(table[k].upper(p) - (k == 0 ? 1.0 : 3.0) * xs[k]));
    }
  }
  c.at_most("lower sigma table", lower, 1e-10);
  c.at_most("upper = 3 lower", upper, 1e-10);
  c.at_most("closed forms vs quantizer", m.sigma_symbol_residual(), 1e-10);
  return c;
}

Criterion commutator_criterion(const AngleOperators& angles, double& c_out) {
  Criterion c;
  const SphereSpinHalfModel m;
  const auto rep = m.commutator_report(angles);
  c.at_most("non-sigma1 components", rep.off_sigma1, 1e-10);
  // Direct Pauli coefficient of the matrix commutator: [A_phi, A_theta] = i c sigma1.
  const auto direct = commutator(angles.phi.matrix(), angles.theta.matrix());
  const double c_direct = (pauli_decompose(direct)[1] / I).real();
  c.at_most("reported c vs direct commutator", std::abs(rep.c - c_direct), 1e-10);
  c_out = rep.c;
  return c;
}

Criterion fuzzy_bridge(double& lambda_out, double& kappa_out) {
  Criterion c;
  const auto fs = build_fuzzy(1);
  const SphereSpinHalfModel m;
  const auto x = m.coordinate_operators();
  for (int k = 1; k <= 3; ++k) {
    const auto a = to_spin_basis(quantize_fuzzy(fs, observables::coordinate(k)));
    c.at_most("L=1 x" + std::to_string(k) + " vs spin-1/2", max_abs_diff(a, x[k - 1].matrix()), 1e-10);
  }
  const auto rep = madore_compare(fs);
  for (int k = 0; k < 3; ++k)
    c.at_most("lambda_" + std::to_string(k + 1) + " - 2/3", std::abs(rep.lambda[k] - 2.0 / 3.0), 1e-10);
  c.at_most("madore residual", rep.residual, 1e-10);
  const double kappa = fs.kappa().value_or(std::nan(""));
  c.at_most("|kappa_1 - lambda|", std::abs(kappa - rep.lambda[2]), 1e-10);
  lambda_out = rep.lambda[2];
  kappa_out = kappa;
  return c;
}

Criterion truncation() {
  Criterion c;
  double worst = 0.0;
  for (int L = 0; L <= 6; ++L) {
    const auto fs = build_fuzzy(L);
    for (int l = L + 1; l <= L + 2; ++l)
      for (int m = -l; m <= l; ++m) worst = std::max(worst, truncation_check(fs, l, m));
  }
  c.at_most("max ||A_Y|| for l in {L+1, L+2}, L <= 6", worst, 1e-10);
  return c;
}

Criterion yhat() {
  Criterion c;
  for (int L = 0; L <= 6; ++L) {
    const auto y = yhat_basis(coefficient_tensor(build_fuzzy(L)));
    c.require("L=" + std::to_string(L) + " count", y.matrices.size() == static_cast<std::size_t>((L + 1) * (L + 1)));
    c.at_least("sigma_min L=" + std::to_string(L), y.smallest_singular_value, 1e-8);
  }
  return c;
}

Criterion berezin_lieb(const AngleOperators& angles) {
  Criterion c;
  const std::vector<std::pair<std::string, std::function<double(double)>>> gs{
      {"x^2", sq}, {"x^4", quartic}, {"exp", expo}};

  const CircleModel circle;
  const auto cb = CircleModel::symbol_basis();
  const std::vector<std::pair<std::string, ComplexMatrix>> circle_ops{
      {"sigma0", pauli(0)}, {"sigma1", pauli(1)}, {"sigma3", pauli(3)}, {"[[0.7,-1.3],[-1.3,2.2]]", circle_matrix(0.7, -1.3, 2.2)}};
  for (const auto& [name, op] : circle_ops)
    for (const auto& [gname, g] : gs)
      c.at_least("circle " + name + " " + gname, berezin_lieb_check(circle.frame(), HermitianOperator(op), cb, g).slack(),
                 -1e-9);

  const SphereSpinHalfModel m;
  const std::vector<ClassicalObservable> sb{observables::constant(1.0), observables::coordinate(1),
                                            observables::coordinate(2), observables::coordinate(3),
                                            observables::polar_angle(), observables::azimuth()};
  std::vector<std::pair<std::string, HermitianOperator>> sphere_ops;
  for (int k = 0; k < 4; ++k) sphere_ops.emplace_back("sigma" + std::to_string(k), HermitianOperator(pauli(k)));
  const auto xs = m.coordinate_operators();
  for (int k = 0; k < 3; ++k) sphere_ops.emplace_back("A_x" + std::to_string(k + 1), xs[k]);
  sphere_ops.emplace_back("A_theta", angles.theta);
  sphere_ops.emplace_back("A_phi", angles.phi);
  for (const auto& [name, op] : sphere_ops)
    for (const auto& [gname, g] : gs)
      c.at_least("sphere " + name + " " + gname, berezin_lieb_check(m.frame(), op, sb, g).slack(), -1e-9);
  return c;
}

Criterion property_suites(std::size_t& total) {
  Criterion c;
  const auto records = run_verification();
  total = records.size();
  for (const auto& r : records) c.require(r.group + "/" + r.name, r.passed);
  return c;
}

// Brute-force oracle: trapezoid in theta on [0, pi] and a uniform grid in phi,
// with the integrands written out from scratch.
class TrapezoidOracle {
 public:
  TrapezoidOracle(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {}
  long points() const { return static_cast<long>(n_theta_ + 1) * n_phi_; }

  // integral of f under sin(theta) dtheta dphi / 4pi.
  template <class F>
  Complex sphere(F f) const {
    const double ht = pi / n_theta_, hp = 2 * pi / n_phi_;
    Complex total = 0.0;
    for (int a = 0; a <= n_theta_; ++a) {
      const double t = a * ht;
      const double w = (a == 0 || a == n_theta_ ? 0.5 : 1.0) * ht * std::sin(t);
      Complex row = 0.0;
      for (int b = 0; b < n_phi_; ++b) row += f(t, b * hp);
      total += w * hp * row;
    }
    return total / (4 * pi);
  }

 private:
  int n_theta_, n_phi_;
};

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

Complex theta_fn(int L, int k, double t, double p) {
  return std::sqrt(binomial(L, k)) * std::pow(std::cos(t / 2), L - k) * std::pow(std::sin(t / 2), k) *
         std::exp(Complex(0.0, -k * p));
}

Criterion oracle_reproducibility(long& points) {
  Criterion c;
  const TrapezoidOracle oracle(32768, 32);
  points = oracle.points();
  c.require("oracle grid has >= 1e6 points", points >= 1000000);

  for (int L = 0; L <= 8; ++L) {
    const auto fs = build_fuzzy(L);
    const std::string tag = " L=" + std::to_string(L);
    double norm_err = 0.0;
    for (int k = 0; k <= L; ++k) {
      const Complex n = oracle.sphere([&](double t, double p) { return std::norm(theta_fn(L, k, t, p)); });
      norm_err = std::max(norm_err, std::abs(n - 1.0 / (L + 1)));
    }
    c.at_most("Theta norm vs 1/(L+1)" + tag, norm_err, 1e-6);
    c.at_most("Theta norm residual (implementation)" + tag, fs.theta_norm_residual(), 1e-6);
    if (L == 0) continue;

    // Top-left entries of A_{x^3} and A_{x^1} give lambda against J_3 = L/2, J_1 = sqrt(L)/2.
    const Complex a3 = double(L + 1) * oracle.sphere([&](double t, double p) {
      return std::cos(t) * std::norm(theta_fn(L, 0, t, p));
    });
    const Complex a1 = double(L + 1) * oracle.sphere([&](double t, double p) {
      return std::sin(t) * std::cos(p) * std::conj(theta_fn(L, 0, t, p)) * theta_fn(L, 1, t, p);
    });
    const double lambda3 = a3.real() / (0.5 * L);
    const double lambda1 = std::abs(a1) / (0.5 * std::sqrt(static_cast<double>(L)));
    const auto rep = madore_compare(fs);
    c.at_most("oracle lambda_3 vs 2/(L+2)" + tag, std::abs(lambda3 - 2.0 / (L + 2)), 1e-6);
    c.at_most("oracle lambda_1 vs 2/(L+2)" + tag, std::abs(lambda1 - 2.0 / (L + 2)), 1e-6);
    for (int k = 0; k < 3; ++k)
      c.at_most("implementation lambda_" + std::to_string(k + 1) + " vs oracle" + tag,
                std::abs(rep.lambda[k] - lambda3), 1e-6);
  }

  // Berezin-Lieb bound values with dnu = N dmu.
  const SphereSpinHalfModel m;
  const std::vector<ClassicalObservable> sb{observables::constant(1.0), observables::coordinate(1),
                                            observables::coordinate(2), observables::coordinate(3)};
  const auto impl = berezin_lieb_check(m.frame(), HermitianOperator(pauli(3)), sb, sq);
  const double lower = oracle.sphere([](double t, double) {
    const double c2 = std::cos(t / 2), s2 = std::sin(t / 2);
    return Complex(2.0 * sq(c2 * c2 - s2 * s2));
  }).real();
  const double upper = oracle.sphere([](double t, double) { return Complex(2.0 * sq(3 * std::cos(t))); }).real();
  c.at_most("sphere lower oracle vs 2/3", std::abs(lower - 2.0 / 3.0), 1e-6);
  c.at_most("sphere upper oracle vs 6", std::abs(upper - 6.0), 1e-6);
  c.at_most("sphere lower implementation vs oracle", std::abs(impl.lower - lower), 1e-6);
  c.at_most("sphere upper implementation vs oracle", std::abs(impl.upper - upper), 1e-6);
  c.at_most("sphere trace", std::abs(impl.trace - 2.0), 1e-6);

  // Circle: periodic trapezoid over [0, 2pi), measure dtheta/pi, N = 1.
  const int n = 1 << 20;
  double cl = 0.0, cu = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * pi * k / n;
    const double lo = sq(std::cos(t)) - sq(std::sin(t));
    cl += sq(lo);
    cu += sq(2 * std::cos(2 * t));
  }
  cl *= 2.0 / n;
  cu *= 2.0 / n;
  const auto ci = berezin_lieb_check(CircleModel().frame(), HermitianOperator(circle_matrix(1, 0, -1)),
                                     CircleModel::symbol_basis(), sq);
  c.at_most("circle lower oracle vs 1", std::abs(cl - 1.0), 1e-6);
  c.at_most("circle upper oracle vs 4", std::abs(cu - 4.0), 1e-6);
  c.at_most("circle lower implementation vs oracle", std::abs(ci.lower - cl), 1e-6);
  c.at_most("circle upper implementation vs oracle", std::abs(ci.upper - cu), 1e-6);
  c.at_most("circle trace", std::abs(ci.trace - 2.0), 1e-6);
  return c;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  auto report = [&](int n, const std::string& title, const Criterion& c, const std::string& extra = "") {
    if (!c.passed()) ++failed;
    std::printf("criterion %2d %s: %s (%s)%s\n", n, c.passed() ? "PASS" : "FAIL", title.c_str(), c.summary().c_str(),
                extra.c_str());
  };
  auto fmt = [](const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return std::string(buf);
  };

  const auto angles = SphereSpinHalfModel().angle_operators();
  report(1, "resolution of identity", identity());
  report(2, "circle symbols", circle_symbols_criterion());
  report(3, "sphere golden values", sphere_golden(angles));
  double c = 0.0;
  const auto comm = commutator_criterion(angles, c);
  report(4, "commutator structure", comm, fmt(" c = %.12f = %.12f pi^2", c, c / (pi * pi)));
  double lambda = 0.0, kappa = 0.0;
  const auto bridge = fuzzy_bridge(lambda, kappa);
  report(5, "fuzzy sphere L=1 bridge", bridge,
         fmt(" lambda = %.12f, kappa_1 = 2r/sqrt(L^2+2L) = %.12f", lambda, kappa));
  report(6, "truncation", truncation());
  report(7, "Yhat basis rank", yhat());
  report(8, "Berezin-Lieb ordering", berezin_lieb(angles));
  std::size_t total = 0;
  const auto props = property_suites(total);
  report(9, "property suites via verify", props, " " + std::to_string(total) + " verify records");
  long points = 0;
  const auto oracle = oracle_reproducibility(points);
  report(10, "oracle reproducibility", oracle, " " + std::to_string(points) + "-point trapezoid grid");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 10 criteria passed in %.2f s\n", 10 - failed, secs);
  return failed == 0 ? 0 : 1;
}
