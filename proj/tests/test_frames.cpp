#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "csq/error.hpp"
#include "csq/frames.hpp"
#include "csq/fuzzy.hpp"
#include "csq/harmonics.hpp"
#include "csq/model_circle.hpp"
#include "csq/model_sphere.hpp"

using namespace csq;
using std::numbers::pi;

namespace {

CoherentFrame circle_frame() { return CircleModel().frame(); }
CoherentFrame sphere_frame() { return SphereSpinHalfModel().frame(); }

std::vector<Point> random_points(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> t(0.0, pi), p(0.0, 2 * pi);
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) out.push_back({t(gen), p(gen)});
  return out;
}

}  // namespace

TEST_CASE("circle states and weight") {
  const auto f = circle_frame();
  for (double t : {0.0, 0.3, 2.0, 5.9}) {
    const auto s = f.state({t, 0.0});
    CHECK(std::abs(s[0] - std::cos(t)) < 1e-15);
    CHECK(std::abs(s[1] - std::sin(t)) < 1e-15);
    CHECK(std::abs(f.weight({t, 0.0}) - 1.0) < 1e-15);
  }
}

TEST_CASE("sphere states and weight") {
  const auto f = sphere_frame();
  for (const auto& x : random_points(20, 1)) {
    const auto s = f.state(x);
    CHECK(std::abs(s[0] - std::cos(x.theta / 2)) < 1e-14);
    CHECK(std::abs(s[1] - std::sin(x.theta / 2) * std::exp(Complex(0, x.phi))) < 1e-14);
    CHECK(std::abs(f.weight(x) - 2.0) < 1e-14);
    CHECK(std::abs(std::norm(s[0]) + std::norm(s[1]) - 1.0) < 1e-12);
  }
}

TEST_CASE("one-dimensional constant family") {
  const auto f = make_frame(OrthoFamily(Domain::sphere(), {[](const Point&) { return Complex(1.0); }}, {"one"}, 0));
  const auto s = f.state({1.0, 2.0});
  CHECK(s.size() == 1);
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  CHECK(f.weight({1.0, 2.0}) == doctest::Approx(1.0));
  CHECK(check_identity(f, f.rule()) < 1e-14);
}

TEST_CASE("resolution of the identity") {
  CHECK(check_identity(circle_frame(), circle_frame().rule()) < 1e-12);
  CHECK(check_identity(sphere_frame(), sphere_frame().rule()) < 1e-12);
  const auto fs = build_fuzzy(4);
  CHECK(check_identity(fs.frame(), fs.frame().rule()) < 1e-10);
}

TEST_CASE("identity residual shrinks with degree") {
  // The adequate rule has degree 2; lower degrees leave a visible residual.
  const auto f = sphere_frame();
  const double r0 = check_identity(f, build_rule(Domain::sphere(), 0));
  const double r2 = check_identity(f, build_rule(Domain::sphere(), 2));
  const double r8 = check_identity(f, build_rule(Domain::sphere(), 8));
  CHECK(r0 > 1e-3);
  CHECK(r2 < 1e-13);
  CHECK(r8 < 1e-13);
}

TEST_CASE("non-orthonormal families are rejected") {
  auto make = [](double scale) {
    return OrthoFamily(Domain::circle(),
                       {[=](const Point& x) { return Complex(scale * std::cos(x.theta)); },
                        [](const Point& x) { return Complex(std::sin(x.theta)); }},
                       {"c", "s"}, 2);
  };
  CHECK_NOTHROW(make(1.0));
  CHECK_THROWS_AS(make(1.001), NotOrthonormalError);
  CHECK_THROWS_AS(OrthoFamily(Domain::sphere(), {}, {}, 0), InvalidArgument);
}

TEST_CASE("degenerate points") {
  // sqrt(2) sin(theta/2) is normalized but vanishes at the north pole.
  const auto f = make_frame(OrthoFamily(
      Domain::sphere(), {[](const Point& x) { return Complex(std::sqrt(2.0) * std::sin(x.theta / 2)); }}, {"s"}, 1));
  CHECK_THROWS_AS(f.state({0.0, 0.3}), DegeneratePointError);
  CHECK_NOTHROW(f.state({0.2, 0.3}));
}

TEST_CASE("kernel values") {
  const auto kc = kernel(circle_frame());
  for (double a : {0.0, 0.4, 3.0})
    for (double b : {0.1, 1.7, 6.0}) CHECK(std::abs(kc({a, 0}, {b, 0}) - std::cos(a - b)) < 1e-14);
  const auto ks = kernel(sphere_frame());
  for (const auto& x : random_points(10, 2)) CHECK(std::abs(ks(x, x) - 1.0) < 1e-14);
  CHECK(std::abs(ks({0.0, 0.0}, {pi, 0.0})) < 1e-15);
}

TEST_CASE("kernel is Hermitian and bounded") {
  const auto ks = kernel(sphere_frame());
  const auto pts = random_points(15, 3);
  for (const auto& x : pts)
    for (const auto& y : pts) {
      CHECK(std::abs(ks(x, y) - std::conj(ks(y, x))) < 1e-14);
      CHECK(std::abs(ks(x, y)) <= 1.0 + 1e-14);
    }
}

TEST_CASE("reproducing property") {
  const auto fc = circle_frame();
  auto psi = [&](const Point& x) { return std::conj(fc.state(x)[0]) * std::sqrt(fc.weight(x)); };
  const auto rep = reproduce(fc, fc.rule(2), psi);
  for (double t : {0.0, 0.5, 2.5, 4.0}) CHECK(std::abs(rep({t, 0}) - psi({t, 0})) < 1e-10);

  const auto zero = reproduce(fc, fc.rule(), [](const Point&) { return Complex(0.0); });
  CHECK(zero({1.0, 0.0}) == Complex(0.0));

  const auto fs = sphere_frame();
  auto y50 = [](const Point& x) { return spherical_harmonic(5, 0, x); };
  const auto rs = reproduce(fs, fs.rule(5), y50);
  double worst = 0.0;
  for (const auto& x : random_points(30, 4)) worst = std::max(worst, std::abs(rs(x) - y50(x)));
  CHECK(worst > 0.1);
}

TEST_CASE("weighted injection norm is isometric") {
  const auto f = sphere_frame();
  const std::vector<Complex> psi{Complex(0.3, -1.2), Complex(2.0, 0.5)};
  const double expect = std::norm(psi[0]) + std::norm(psi[1]);
  CHECK(std::abs(weighted_injection_norm(f, f.rule(), psi) - expect) < 1e-12);
  const std::vector<Complex> bad{1.0};
  CHECK_THROWS_AS(weighted_injection_norm(f, f.rule(), bad), DimensionError);
}
