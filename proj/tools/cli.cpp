#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "csq/fuzzy.hpp"
#include "csq/json_out.hpp"
#include "csq/model_circle.hpp"
#include "csq/model_sphere.hpp"
#include "csq/observables.hpp"
#include "csq/quantizer.hpp"
#include "csq/verify.hpp"

namespace csq::cli {

namespace {

using json::Json;
constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::string model) : model_(std::move(model)) {}

  Json& quantities() { return quantities_; }

  void residual(const std::string& name, double value, double tolerance) {
    residuals_[name] = value;
    tolerances_[name] = tolerance;
    if (!(value <= tolerance)) ok_ = false;
  }

  bool ok() const { return ok_; }

  Json to_json() const {
    Json j;
    j["model"] = model_;
    j["quantities"] = quantities_.is_null() ? Json::object() : quantities_;
    j["residuals"] = residuals_.is_null() ? Json::object() : residuals_;
    j["tolerances_used"] = tolerances_.is_null() ? Json::object() : tolerances_;
    return j;
  }

 private:
  std::string model_;
  Json quantities_;
  Json residuals_;
  Json tolerances_;
  bool ok_ = true;
};

int finish(const Report& r, std::ostream& out) {
  json::write(out, r.to_json());
  return r.ok() ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- circle

struct CircleArgs {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
  int samples = 8;
};

int cmd_circle(const CircleArgs& args, std::ostream& out) {
  if (args.samples < 1) throw UsageError("--samples must be >= 1");
  const CircleModel model;
  const ComplexMatrix m = circle_matrix(args.a, args.b, args.d);
  const CirclePauliCoefficients dec = circle_matrix_decomposition(m);
  const CircleSymbols closed = circle_symbols(args.a, args.b, args.d);
  const SymbolFunction lower = lower_symbol(model.frame(), m);

  Report r("circle");
  Json& q = r.quantities();
  q["input"] = {{"a", args.a}, {"b", args.b}, {"d", args.d}};
  q["matrix"] = json::matrix(m);
  q["decomposition"] = {{"c0", dec.c0}, {"c1", dec.c1}, {"c3", dec.c3}};
  Json samples = Json::array();
  double lower_err = 0.0;
  for (int k = 0; k < args.samples; ++k) {
    const Point x{2.0 * kPi * k / args.samples, 0.0};
    samples.push_back({{"theta", x.theta}, {"lower", closed.lower(x).real()}, {"upper", closed.upper(x).real()}});
    lower_err = std::max(lower_err, std::abs(lower(x) - closed.lower(x)));
  }
  q["samples"] = std::move(samples);

  const ClassicalObservable up{closed.upper.evaluate, "upper", true, 2};
  r.residual("identity", model.identity_residual(), 1e-12);
  r.residual("lower_vs_quantizer", lower_err, 1e-10);
  r.residual("upper_round_trip", max_abs_diff(quantize(model.frame(), model.rule(), up).matrix(), m), 1e-10);
  return finish(r, out);
}

// ---------------------------------------------------------------- sphere

int cmd_sphere(const std::string& action, std::ostream& out) {
  const SphereSpinHalfModel model;
  Report r("sphere." + action);
  Json& q = r.quantities();

  if (action == "ops") {
    const AngleOperators ang = model.angle_operators();
    const auto coords = model.coordinate_operators();
    q["A_theta"] = json::matrix(ang.theta.matrix());
    q["A_phi"] = json::matrix(ang.phi.matrix());
    for (int k = 0; k < 3; ++k) q["A_x" + std::to_string(k + 1)] = json::matrix(coords[static_cast<std::size_t>(k)].matrix());
    const ComplexMatrix theta_ref{{3.0 * kPi / 8.0, 0.0}, {0.0, 5.0 * kPi / 8.0}};
    const ComplexMatrix phi_ref{{kPi, Complex{0.0, kPi / 4.0}}, {Complex{0.0, -kPi / 4.0}, kPi}};
    r.residual("A_theta_vs_closed_form", max_abs_diff(ang.theta.matrix(), theta_ref), 1e-8);
    r.residual("A_phi_vs_closed_form", max_abs_diff(ang.phi.matrix(), phi_ref), 1e-8);
    double xr = 0.0;
    for (int k = 0; k < 3; ++k)
      xr = std::max(xr, max_abs_diff(coords[static_cast<std::size_t>(k)].matrix(), (1.0 / 3.0) * pauli(k + 1)));
    r.residual("A_x_vs_sigma_over_3", xr, 1e-10);
  } else if (action == "symbols") {
    const auto table = model.sigma_symbols();
    Json samples = Json::array();
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Point x{a * kPi / 4.0, b * kPi / 2.0};
        Json lo = Json::array(), up = Json::array();
        for (const auto& s : table) {
          lo.push_back(s.lower(x).real());
          up.push_back(s.upper(x).real());
        }
        samples.push_back({{"theta", x.theta}, {"phi", x.phi}, {"lower", lo}, {"upper", up}});
      }
    q["order"] = {"sigma0", "sigma1", "sigma2", "sigma3"};
    q["samples"] = std::move(samples);
    r.residual("sigma_symbols_vs_quantizer", model.sigma_symbol_residual(), 1e-10);
  } else if (action == "commutator") {
    const CommutatorReport rep = model.commutator_report();
    q["matrix"] = json::matrix(rep.matrix);
    q["structure"] = "i*c*sigma1";
    q["c"] = rep.c;
    q["c_over_pi_squared"] = rep.c / (kPi * kPi);
    q["square_lower_symbol"] = rep.square_symbol;
    q["paper_discrepancy"] =
        "published constant is pi^2/64; the published A_phi and A_theta give pi^2/16 by Pauli algebra, "
        "and c here is computed from the quantized matrices";
    r.residual("off_sigma1_components", rep.off_sigma1, 1e-10);
    r.residual("lower_symbol_vs_i_c_sin_theta_cos_phi", rep.lower_symbol_residual, 1e-10);
    r.residual("square_symbol_spread", rep.square_symbol_spread, 1e-10);
  } else {  // phase-check
    const CoherentFrame alt(SphereSpinHalfModel::phase_alternative_family());
    const ComplexMatrix a = quantize(model.frame(), model.rule(), observables::coordinate(3)).matrix();
    const ComplexMatrix b = quantize(alt, model.rule(), observables::coordinate(3)).matrix();
    q["A_x3"] = json::matrix(a);
    q["A_x3_alternative"] = json::matrix(b);
    r.residual("projector_difference", model.phase_alternative_equivalence(), 1e-12);
    r.residual("A_x3_difference", max_abs_diff(a, b), 1e-12);
  }
  return finish(r, out);
}

// ---------------------------------------------------------------- fuzzy

struct FuzzyArgs {
  std::string action = "ops";
  int L = 1;
  double radius = 1.0;
  std::string f;
  std::optional<int> ell;
  std::string export_tensor;
};

int max_L_from_env() {
  const char* env = std::getenv("CSQ_MAX_L");
  if (env == nullptr || *env == '\0') return 16;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(env, &pos);
    if (pos != std::string(env).size() || v < 0) throw UsageError("");
    return v;
  } catch (...) {
    throw UsageError(std::string("CSQ_MAX_L must be a non-negative integer, got '") + env + "'");
  }
}

ClassicalObservable parse_observable(const std::string& text) {
  if (text == "x1") return observables::coordinate(1);
  if (text == "x2") return observables::coordinate(2);
  if (text == "x3") return observables::coordinate(3);
  std::vector<observables::HarmonicTerm> terms;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.empty()) continue;
    std::stringstream fields(item);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(fields, tok, ',')) parts.push_back(tok);
    if (parts.size() != 4) throw UsageError("--f term '" + item + "' must be l,m,re,im");
    try {
      std::size_t p0 = 0, p1 = 0, p2 = 0, p3 = 0;
      const int l = std::stoi(parts[0], &p0);
      const int m = std::stoi(parts[1], &p1);
      const double re = std::stod(parts[2], &p2);
      const double im = std::stod(parts[3], &p3);
      if (p0 != parts[0].size() || p1 != parts[1].size() || p2 != parts[2].size() || p3 != parts[3].size())
        throw UsageError("");
      if (l < 0 || std::abs(m) > l) throw UsageError("");
      terms.push_back({l, m, Complex{re, im}});
    } catch (...) {
      throw UsageError("--f term '" + item + "' is malformed (expected l,m,re,im with |m| <= l)");
    }
  }
  if (terms.empty()) throw UsageError("--f must be x1, x2, x3 or a list 'l,m,re,im;...'");
  return observables::harmonic_sum(terms);
}

Json madore_json(const FuzzySphere& fs) {
  const MadoreReport m = madore_compare(fs);
  Json j;
  j["lambda"] = {m.lambda[0], m.lambda[1], m.lambda[2]};
  j["lambda_closed_form"] = 2.0 / (fs.L() + 2.0);
  j["kappa"] = m.kappa ? Json(*m.kappa) : Json(nullptr);
  j["residual"] = m.residual;
  j["radius_multiple"] = m.radius_multiple;
  j["radius_residual"] = m.radius_residual;
  return j;
}

Json truncation_row(const FuzzySphere& fs, int l) {
  Json norms = Json::array();
  for (int m = -l; m <= l; ++m) norms.push_back(truncation_check(fs, l, m));
  return {{"ell", l}, {"norms", std::move(norms)}, {"vanishes", l > fs.L()}};
}

int cmd_fuzzy(const FuzzyArgs& args, std::ostream& out) {
  const int max_L = max_L_from_env();
  if (args.L < 0) throw UsageError("--L must be >= 0");
  if (args.L > max_L) throw UsageError("--L " + std::to_string(args.L) + " exceeds the configured maximum " +
                                       std::to_string(max_L) + " (CSQ_MAX_L)");
  if (!(args.radius > 0.0)) throw UsageError("--r must be positive");
  std::optional<ClassicalObservable> f;
  if (!args.f.empty()) f = parse_observable(args.f);
  if (args.action == "truncation" && !args.ell) throw UsageError("truncation requires --ell");
  if (args.ell && *args.ell < 0) throw UsageError("--ell must be >= 0");

  const FuzzySphere fs(args.L, args.radius);
  Report r("fuzzy." + args.action);
  Json& q = r.quantities();
  q["L"] = args.L;
  q["radius"] = args.radius;
  q["kappa"] = fs.kappa() ? Json(*fs.kappa()) : Json(nullptr);
  r.residual("identity", fs.identity_residual(), 1e-10);

  if (args.action == "ops") {
    if (f) {
      const ComplexMatrix a = quantize_fuzzy(fs, *f);
      q["f"] = args.f;
      q["operator"] = json::matrix(a);
      q["operator_spin_basis"] = json::matrix(to_spin_basis(a));
    }
    q["madore"] = madore_json(fs);
    Json table = Json::array();
    for (int l = 0; l <= args.L + 2; ++l) table.push_back(truncation_row(fs, l));
    q["truncation"] = std::move(table);
  } else if (args.action == "madore") {
    q["madore"] = madore_json(fs);
  } else if (args.action == "truncation") {
    const Json row = truncation_row(fs, *args.ell);
    q["truncation"] = row;
    if (*args.ell > args.L) {
      double worst = 0.0;
      for (const auto& v : row["norms"]) worst = std::max(worst, v.get<double>());
      r.residual("truncated_norm", worst, 1e-10);
    }
  }

  if (!args.export_tensor.empty()) {
    const CoefficientTensor t = coefficient_tensor(fs);
    std::ofstream file(args.export_tensor);
    if (!file) throw Error("cannot open '" + args.export_tensor + "' for writing");
    const bool csv = args.export_tensor.size() >= 4 &&
                     args.export_tensor.compare(args.export_tensor.size() - 4, 4, ".csv") == 0;
    if (csv)
      write_tensor_csv(file, t);
    else
      write_tensor_json(file, t);
    q["tensor_export"] = {{"path", args.export_tensor}, {"format", csv ? "csv" : "json"}};
  }
  return finish(r, out);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::optional<double>& tol, const std::string& only, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.tolerance_override = tol;
  if (!only.empty()) {
    const auto& names = verification_groups();
    if (std::find(names.begin(), names.end(), only) == names.end())
      throw UsageError("unknown verification group '" + only + "'");
    opts.only = only;
  }
  const auto records = run_verification(opts);
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& rec : records) {
    checks.push_back({{"group", rec.group},
                      {"name", rec.name},
                      {"kind", rec.kind == CheckKind::AtMost ? "at_most" : "at_least"},
                      {"value", rec.value},
                      {"tolerance", rec.tolerance},
                      {"passed", rec.passed}});
    if (!rec.passed) {
      ++failed;
      err << "FAILED " << rec.group << "/" << rec.name << ": value " << json::format_number(rec.value)
          << (rec.kind == CheckKind::AtMost ? " > " : " < ") << json::format_number(rec.tolerance) << "\n";
    }
  }
  Json doc;
  doc["model"] = "verify";
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"total", records.size()}, {"failed", failed}};
  json::write(out, doc);
  return failed == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent-state quantization of the circle, the 2-sphere and the fuzzy sphere", "csq"};
  app.require_subcommand(1);

  CircleArgs circle_args;
  auto* circle = app.add_subcommand("circle", "Real quantization of the circle for A = [[a, b], [b, d]]");
  circle->add_option("--a", circle_args.a, "Matrix entry a");
  circle->add_option("--b", circle_args.b, "Matrix entry b");
  circle->add_option("--d", circle_args.d, "Matrix entry d");
  circle->add_option("--samples", circle_args.samples, "Number of symbol sample angles")->capture_default_str();

  std::string sphere_action;
  auto* sphere = app.add_subcommand("sphere", "Spin-1/2 quantization of the 2-sphere");
  sphere->add_option("action", sphere_action, "ops | symbols | commutator | phase-check")
      ->required()
      ->check(CLI::IsMember({"ops", "symbols", "commutator", "phase-check"}));

  FuzzyArgs fuzzy_args;
  int ell = -1;
  auto* fuzzy = app.add_subcommand(
      "fuzzy",
      "Fuzzy sphere of order L. Harmonics are normalized to unit norm under the unit-mass sphere measure.");
  fuzzy->add_option("action", fuzzy_args.action, "ops | madore | truncation")
      ->check(CLI::IsMember({"ops", "madore", "truncation"}))
      ->capture_default_str();
  fuzzy->add_option("--L", fuzzy_args.L, "Order L (dimension L+1)")->capture_default_str();
  fuzzy->add_option("--r", fuzzy_args.radius, "Radius entering kappa")->capture_default_str();
  fuzzy->add_option("--f", fuzzy_args.f, "x1 | x2 | x3 | 'l,m,re,im;...'");
  auto* ell_opt = fuzzy->add_option("--ell", ell, "Harmonic degree for the truncation table");
  fuzzy->add_option("--export-tensor", fuzzy_args.export_tensor, "Write the coefficient tensor (.csv or JSON)");

  double verify_tol = 0.0;
  std::string verify_only;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite; exit 0 iff every check passes");
  auto* tol_opt = verify->add_option("--tol", verify_tol, "Override every upper-bound tolerance");
  verify->add_option("--only", verify_only, "Run a single group");

  std::vector<std::string> argv_store{"csq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (circle->parsed()) return cmd_circle(circle_args, out);
    if (sphere->parsed()) return cmd_sphere(sphere_action, out);
    if (fuzzy->parsed()) {
      if (ell_opt->count() > 0) fuzzy_args.ell = ell;
      return cmd_fuzzy(fuzzy_args, out);
    }
    if (verify->parsed()) {
      std::optional<double> tol;
      if (tol_opt->count() > 0) {
        if (!(verify_tol > 0.0)) throw UsageError("--tol must be positive");
        tol = verify_tol;
      }
      return cmd_verify(tol, verify_only, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace csq::cli
