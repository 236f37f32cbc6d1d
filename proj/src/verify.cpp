#include "csq/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "csq/frames.hpp"
#include "csq/fuzzy.hpp"
#include "csq/harmonics.hpp"
#include "csq/model_circle.hpp"
#include "csq/model_sphere.hpp"
#include "csq/observables.hpp"
#include "csq/quantizer.hpp"

namespace csq {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  Recorder(std::string group, const VerifyOptions& opts, std::vector<CheckRecord>& out)
      : group_(std::move(group)), opts_(opts), out_(out) {}

  void at_most(const std::string& name, double value, double tol) {
    if (opts_.tolerance_override) tol = *opts_.tolerance_override;
    out_.push_back({group_, name, CheckKind::AtMost, value, tol, value <= tol});
  }
  void at_least(const std::string& name, double value, double threshold) {
    out_.push_back({group_, name, CheckKind::AtLeast, value, threshold, value >= threshold});
  }

 private:
  std::string group_;
  const VerifyOptions& opts_;
  std::vector<CheckRecord>& out_;
};

std::string tag(const std::string& base, int L) { return base + "[L=" + std::to_string(L) + "]"; }

void identity_group(Recorder& r) {
  const CircleModel circle;
  r.at_most("circle", circle.identity_residual(), 1e-10);
  const SphereSpinHalfModel sphere;
  r.at_most("sphere_spin_half", sphere.identity_residual(), 1e-10);
  for (int L = 0; L <= 8; ++L) {
    const FuzzySphere fs(L);
    r.at_most(tag("fuzzy", L), fs.identity_residual(), 1e-10);
  }
}

void circle_group(Recorder& r) {
  const CircleModel model;
  const auto basis = CircleModel::symbol_basis();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  double lower_err = 0.0, upper_err = 0.0, round_trip = 0.0, imag = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = coef(rng), b = coef(rng), d = coef(rng);
    const ComplexMatrix m = circle_matrix(a, b, d);
    const CircleSymbols closed = circle_symbols(a, b, d);
    const SymbolFunction lower = lower_symbol(model.frame(), m);
    const UpperSymbol upper = upper_symbol(model.frame(), m, basis);
    for (int k = 0; k < 64; ++k) {
      const Point x{2.0 * kPi * k / 64.0, 0.0};
      lower_err = std::max(lower_err, std::abs(lower(x) - closed.lower(x)));
      upper_err = std::max(upper_err, std::abs(upper.symbol(x) - closed.upper(x)));
    }
    const ClassicalObservable up{closed.upper.evaluate, "upper", true, 2};
    const HermitianOperator back = quantize(model.frame(), model.rule(), up);
    round_trip = std::max(round_trip, max_abs_diff(back.matrix(), m));
    imag = std::max(imag, CircleModel::max_imaginary_part(back.matrix()));
  }
  r.at_most("lower_symbol_closed_form", lower_err, 1e-10);
  r.at_most("upper_symbol_closed_form", upper_err, 1e-10);
  r.at_most("upper_symbol_round_trip", round_trip, 1e-10);
  r.at_most("real_hilbert_space", imag, 1e-14);
  double weight_err = 0.0;
  for (const Point& x : model.rule().nodes()) weight_err = std::max(weight_err, std::abs(model.frame().weight(x) - 1.0));
  r.at_most("unit_weight", weight_err, 1e-14);
}

void sphere_group(Recorder& r) {
  const SphereSpinHalfModel model;
  const AngleOperators ang = model.angle_operators();
  const ComplexMatrix theta_expected{{3.0 * kPi / 8.0, 0.0}, {0.0, 5.0 * kPi / 8.0}};
  const ComplexMatrix phi_expected{{kPi, Complex{0.0, kPi / 4.0}}, {Complex{0.0, -kPi / 4.0}, kPi}};
  r.at_most("A_theta", max_abs_diff(ang.theta.matrix(), theta_expected), 1e-8);
  r.at_most("A_phi", max_abs_diff(ang.phi.matrix(), phi_expected), 1e-8);
  const auto coords = model.coordinate_operators();
  for (int k = 0; k < 3; ++k)
    r.at_most("A_x" + std::to_string(k + 1),
              max_abs_diff(coords[static_cast<std::size_t>(k)].matrix(), (1.0 / 3.0) * pauli(k + 1)), 1e-10);
  r.at_most("sigma_symbols", model.sigma_symbol_residual(), 1e-10);
  r.at_most("projector_decomposition", model.projector_decomposition_residual(), 1e-12);
  r.at_most("phase_alternative", model.phase_alternative_equivalence(), 1e-12);
}

void commutator_group(Recorder& r) {
  const SphereSpinHalfModel model;
  const AngleOperators ang = model.angle_operators();
  const CommutatorReport rep = model.commutator_report(ang);
  r.at_most("off_sigma1_components", rep.off_sigma1, 1e-10);
  const ComplexMatrix direct = ang.phi.matrix() * ang.theta.matrix() - ang.theta.matrix() * ang.phi.matrix();
  const double c_direct = (0.5 * hs_inner(pauli(1), direct) / Complex{0.0, 1.0}).real();
  r.at_most("constant_vs_direct_product", std::abs(rep.c - c_direct), 1e-10);
  r.at_most("constant_vs_pauli_algebra", std::abs(rep.c - kPi * kPi / 16.0), 1e-7);
  r.at_most("lower_symbol_structure", rep.lower_symbol_residual, 1e-10);
  r.at_most("square_symbol_constant", rep.square_symbol_spread, 1e-10);
  r.at_most("square_symbol_value", std::abs(rep.square_symbol + rep.c * rep.c), 1e-10);
}

void fuzzy_bridge_group(Recorder& r) {
  const FuzzySphere fs(1);
  double bridge = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix a = to_spin_basis(quantize_fuzzy(fs, observables::coordinate(k)));
    bridge = std::max(bridge, max_abs_diff(a, (1.0 / 3.0) * pauli(k)));
  }
  r.at_most("L1_coordinate_operators", bridge, 1e-10);
  const MadoreReport rep = madore_compare(fs);
  double lam = 0.0;
  for (double l : rep.lambda) lam = std::max(lam, std::abs(l - 2.0 / 3.0));
  r.at_most("L1_lambda_equals_two_thirds", lam, 1e-10);
  r.at_most("L2_kappa_closed_form", std::abs(FuzzySphere(2).kappa().value_or(0.0) - 1.0 / std::sqrt(2.0)), 1e-15);
  for (int L = 1; L <= 8; ++L) {
    const MadoreReport m = madore_compare(FuzzySphere(L));
    double err = 0.0;
    for (double l : m.lambda) err = std::max(err, std::abs(l - 2.0 / (L + 2.0)));
    r.at_most(tag("lambda_closed_form", L), err, 1e-10);
    r.at_most(tag("proportional_to_spin", L), m.residual, 1e-10);
    r.at_most(tag("radius_relation", L), m.radius_residual, 1e-10);
  }
}

void truncation_group(Recorder& r) {
  for (int L = 0; L <= 6; ++L) {
    const FuzzySphere fs(L);
    double above = 0.0;
    for (int l = L + 1; l <= L + 2; ++l)
      for (int m = -l; m <= l; ++m) above = std::max(above, truncation_check(fs, l, m));
    r.at_most(tag("vanishes_above_L", L), above, 1e-10);
    double below = std::numeric_limits<double>::infinity();
    for (int l = 0; l <= L; ++l)
      for (int m = -l; m <= l; ++m) below = std::min(below, truncation_check(fs, l, m));
    r.at_least(tag("nonzero_up_to_L", L), below, 1e-8);
  }
}

void yhat_group(Recorder& r) {
  for (int L = 0; L <= 6; ++L) {
    const YhatBasis b = yhat_basis(coefficient_tensor(FuzzySphere(L)));
    r.at_least(tag("smallest_singular_value", L), b.smallest_singular_value, 1e-8);
    r.at_most(tag("basis_size_mismatch", L),
              std::abs(static_cast<double>(b.matrices.size()) - (L + 1.0) * (L + 1.0)), 0.0);
  }
}

const std::array<std::pair<const char*, std::function<double(double)>>, 3>& convex_functions() {
  static const std::array<std::pair<const char*, std::function<double(double)>>, 3> g = {{
      {"x^2", [](double t) { return t * t; }},
      {"x^4", [](double t) { return t * t * t * t; }},
      {"exp", [](double t) { return std::exp(t); }},
  }};
  return g;
}

void berezin_lieb_group(Recorder& r) {
  const CircleModel circle;
  struct CircleCase {
    const char* name;
    double a, b, d;
  };
  for (const CircleCase& c : {CircleCase{"sigma0", 1, 0, 1}, CircleCase{"sigma1", 0, 1, 0},
                              CircleCase{"sigma3", 1, 0, -1}, CircleCase{"mixed", 1.0, 0.5, -2.0}}) {
    const HermitianOperator op(circle_matrix(c.a, c.b, c.d));
    const SymbolFunction upper = circle_symbols(c.a, c.b, c.d).upper;
    for (const auto& [gname, g] : convex_functions()) {
      const BerezinLiebBounds b = berezin_lieb_check(circle.frame(), op, upper, g);
      r.at_most(std::string("circle_") + c.name + "_" + gname, -b.slack(), 1e-9);
    }
  }

  const SphereSpinHalfModel sphere;
  const auto symbols = sphere.sigma_symbols();
  const AngleOperators ang = sphere.angle_operators();
  struct SphereCase {
    std::string name;
    HermitianOperator op;
    SymbolFunction upper;
  };
  std::vector<SphereCase> cases;
  for (int k = 0; k < 4; ++k)
    cases.push_back({"sigma" + std::to_string(k), HermitianOperator(pauli(k)), symbols[static_cast<std::size_t>(k)].upper});
  cases.push_back({"A_theta", ang.theta, {observables::polar_angle().evaluate, SymbolKind::Upper}});
  cases.push_back({"A_phi", ang.phi, {observables::azimuth().evaluate, SymbolKind::Upper}});
  for (const auto& c : cases)
    for (const auto& [gname, g] : convex_functions()) {
      const BerezinLiebBounds b = berezin_lieb_check(sphere.frame(), c.op, c.upper, g);
      r.at_most("sphere_" + c.name + "_" + gname, -b.slack(), 1e-9);
    }
}

ClassicalObservable random_real_harmonic_sum(std::mt19937_64& rng, int lmax) {
  // Real f: pair c Y_l^m with (-1)^m conj(c) Y_l^{-m}.
  std::normal_distribution<double> n01;
  std::vector<observables::HarmonicTerm> terms;
  for (int l = 0; l <= lmax; ++l) {
    terms.push_back({l, 0, Complex{n01(rng), 0.0}});
    for (int m = 1; m <= l; ++m) {
      const Complex c{n01(rng), n01(rng)};
      terms.push_back({l, m, c});
      terms.push_back({l, -m, (m % 2 == 0 ? 1.0 : -1.0) * std::conj(c)});
    }
  }
  ClassicalObservable f = observables::harmonic_sum(terms);
  f.is_real = true;
  return f;
}

void properties_group(Recorder& r) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uth(0.0, kPi), uph(0.0, 2.0 * kPi);

  for (int L = 0; L <= 8; ++L) {
    const ThetaBasis theta(L);
    std::vector<Complex> v(theta.size());
    double err = 0.0;
    for (int s = 0; s < 1000; ++s) {
      theta.evaluate_all({uth(rng), uph(rng)}, v);
      double sum = 0.0;
      for (const auto& z : v) sum += std::norm(z);
      err = std::max(err, std::abs(sum - 1.0));
    }
    r.at_most(tag("theta_partition_of_unity", L), err, 1e-12);
    r.at_most(tag("theta_norm", L), FuzzySphere(L).theta_norm_residual(), 1e-10);
  }

  for (int L = 0; L <= 12; ++L) {
    const SpinMatrices s = SpinMatrices::build(L);
    r.at_most(tag("spin_commutation", L), s.commutation_residual(), 1e-12);
    r.at_most(tag("spin_casimir", L), s.casimir_residual(), 1e-12);
  }

  for (int L = 0; L <= 8; ++L) {
    const FuzzySphere fs(L);
    const ClassicalObservable f = random_real_harmonic_sum(rng, 3);
    const ClassicalObservable g = random_real_harmonic_sum(rng, 3);
    const double a = 0.7, b = -1.3;
    const ComplexMatrix lhs = quantize_fuzzy(fs, observables::linear_combination(a, f, b, g));
    const ComplexMatrix rhs = a * quantize_fuzzy(fs, f) + b * quantize_fuzzy(fs, g);
    r.at_most(tag("quantizer_linearity", L), max_abs_diff(lhs, rhs), 1e-10);
    ClassicalObservable f_raw = f;
    f_raw.is_real = false;  // skip symmetrization to see the raw asymmetry
    r.at_most(tag("quantizer_hermiticity", L), quantize_general(fs.frame(), f_raw).hermitian_asymmetry(), 1e-10);
  }

  for (int L = 0; L <= 6; ++L) {
    const FuzzySphere fs(L);
    const CoefficientTensor t = coefficient_tensor(fs);
    std::normal_distribution<double> n01;
    std::vector<observables::HarmonicTerm> terms;
    for (int l = 0; l <= L + 1; ++l)
      for (int m = -l; m <= l; ++m) terms.push_back({l, m, Complex{n01(rng), n01(rng)}});
    const ComplexMatrix direct = quantize_fuzzy(fs, observables::harmonic_sum(terms));
    const ComplexMatrix via_tensor = static_cast<double>(L + 1) * contract(t, terms).transpose();
    r.at_most(tag("tensor_contraction_vs_direct", L), max_abs_diff(direct, via_tensor), 1e-9);
  }

  auto kernel_checks = [&](const std::string& name, const CoherentFrame& frame) {
    const Kernel k = kernel(frame);
    double herm = 0.0, diag = 0.0, bound = 0.0;
    for (int s = 0; s < 200; ++s) {
      const Point x{frame.domain().kind == DomainKind::Circle ? uph(rng) : uth(rng), uph(rng)};
      const Point y{frame.domain().kind == DomainKind::Circle ? uph(rng) : uth(rng), uph(rng)};
      herm = std::max(herm, std::abs(k(x, y) - std::conj(k(y, x))));
      diag = std::max(diag, std::abs(k(x, x) - 1.0));
      bound = std::max(bound, std::abs(k(x, y)) - 1.0);
    }
    r.at_most("kernel_hermitian_" + name, herm, 1e-12);
    r.at_most("kernel_diagonal_" + name, diag, 1e-12);
    r.at_most("kernel_cauchy_schwarz_" + name, std::max(bound, 0.0), 1e-12);
  };
  kernel_checks("circle", CircleModel().frame());
  kernel_checks("sphere", SphereSpinHalfModel().frame());
  kernel_checks("fuzzy_L4", FuzzySphere(4).frame());

  // quantize(upper_symbol(O)) = O
  const SphereSpinHalfModel sphere;
  std::vector<ClassicalObservable> basis = {observables::constant(1.0), observables::coordinate(1),
                                            observables::coordinate(2), observables::coordinate(3)};
  double rt = 0.0;
  for (int k = 0; k < 4; ++k) {
    const UpperSymbol up = upper_symbol(sphere.frame(), pauli(k), basis);
    const ClassicalObservable sym{up.symbol.evaluate, "upper", true, 1};
    rt = std::max(rt, max_abs_diff(quantize_general(sphere.frame(), sym), pauli(k)));
  }
  r.at_most("upper_symbol_round_trip_sphere", rt, 1e-8);

  // Exact rules: total mass and vanishing means of Y_l^m, 1 <= l <= degree.
  double mass = 0.0, mean = 0.0;
  for (int degree : {0, 3, 8, 17}) {
    const QuadratureRule rule = build_rule(Domain::sphere(), degree);
    mass = std::max(mass, std::abs(integrate(rule, [](const Point&) { return Complex{1.0, 0.0}; }) - 1.0));
    for (int l = 1; l <= degree; ++l)
      for (int m = -l; m <= l; ++m)
        mean = std::max(mean, std::abs(integrate(rule, [&](const Point& x) { return spherical_harmonic(l, m, x); })));
  }
  r.at_most("sphere_rule_mass", mass, 1e-12);
  r.at_most("sphere_rule_harmonic_means", mean, 1e-12);
}

using GroupFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, GroupFn>>& groups() {
  static const std::vector<std::pair<std::string, GroupFn>> g = {
      {"identity", identity_group},       {"circle", circle_group},
      {"sphere", sphere_group},           {"commutator", commutator_group},
      {"fuzzy-bridge", fuzzy_bridge_group}, {"truncation", truncation_group},
      {"yhat", yhat_group},               {"berezin-lieb", berezin_lieb_group},
      {"properties", properties_group},
  };
  return g;
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : groups()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<CheckRecord> run_verification(const VerifyOptions& options) {
  if (options.only) {
    const auto& names = verification_groups();
    if (std::find(names.begin(), names.end(), *options.only) == names.end())
      throw InvalidArgument("unknown verification group '" + *options.only + "'");
  }
  std::vector<CheckRecord> out;
  for (const auto& [name, fn] : groups()) {
    if (options.only && *options.only != name) continue;
    Recorder rec(name, options, out);
    fn(rec);
  }
  return out;
}

}  // namespace csq
