#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "csq/error.hpp"
#include "csq/model_circle.hpp"

using namespace csq;
using std::numbers::pi;

TEST_CASE("circle model identity") {
  const CircleModel c;
  CHECK(c.identity_residual() < 1e-12);
  for (double t = 0.0; t < 2 * pi; t += 0.1) CHECK(std::abs(c.frame().weight({t, 0}) - 1.0) < 1e-15);
}

TEST_CASE("closed-form symbol examples") {
  const auto id = circle_symbols(1, 0, 1);
  for (double t : {0.0, 0.7, 3.3}) {
    CHECK(std::abs(id.lower({t, 0}) - 1.0) < 1e-15);
    CHECK(std::abs(id.upper({t, 0}) - 1.0) < 1e-15);
  }
  CHECK(std::abs(circle_symbols(1, 0, -1).lower({0.0, 0}) - 1.0) < 1e-15);
  CHECK(std::abs(circle_symbols(0, 1, 0).lower({pi / 4, 0}) - 1.0) < 1e-15);
  CHECK(circle_symbols(0, 1, 0).lower.kind == SymbolKind::Lower);
  CHECK(circle_symbols(0, 1, 0).upper.kind == SymbolKind::Upper);
}

TEST_CASE("closed forms agree with the quantizer") {
  const CircleModel c;
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(gen), b = u(gen), d = u(gen);
    const auto s = circle_symbols(a, b, d);
    const auto lower = lower_symbol(c.frame(), circle_matrix(a, b, d));
    for (int k = 0; k < 64; ++k) {
      const Point x{2 * pi * k / 64, 0.0};
      CHECK(std::abs(s.lower(x) - lower(x)) < 1e-10);
    }
    const auto back = quantize(c.frame(), c.rule(), {s.upper.evaluate, "upper", true, 2});
    CHECK(max_abs_diff(back.matrix(), circle_matrix(a, b, d)) < 1e-10);
    CHECK(CircleModel::max_imaginary_part(back.matrix()) < 1e-14);
  }
}

TEST_CASE("quantized trig functions") {
  const CircleModel c;
  const auto q = [&](const ClassicalObservable& f) { return quantize(c.frame(), c.rule(), f).matrix(); };
  CHECK(max_abs_diff(q(observables::circle_cos(2)), 0.5 * pauli(3)) < 1e-14);
  CHECK(max_abs_diff(q(observables::circle_sin(2)), 0.5 * pauli(1)) < 1e-14);
  CHECK(q(observables::circle_cos(4)).max_abs() < 1e-14);
}

TEST_CASE("Pauli decomposition of real symmetric matrices") {
  const auto d = circle_matrix_decomposition(circle_matrix(3, 0, 5));
  CHECK(d.c0 == doctest::Approx(4.0));
  CHECK(d.c1 == doctest::Approx(0.0));
  CHECK(d.c3 == doctest::Approx(-1.0));
  const auto s1 = circle_matrix_decomposition(pauli(1));
  CHECK(s1.c0 == 0.0);
  CHECK(s1.c1 == 1.0);
  CHECK(s1.c3 == 0.0);
  const auto z = circle_matrix_decomposition(ComplexMatrix::zeros(2));
  CHECK((z.c0 == 0.0 && z.c1 == 0.0 && z.c3 == 0.0));

  const auto m = circle_matrix(0.3, -2.0, 1.1);
  const auto k = circle_matrix_decomposition(m);
  const auto rebuilt = Complex(k.c0) * pauli(0) + Complex(k.c1) * pauli(1) + Complex(k.c3) * pauli(3);
  CHECK(max_abs_diff(rebuilt, m) < 1e-15);
}

TEST_CASE("decomposition rejects bad input") {
  CHECK_THROWS_AS(circle_matrix_decomposition(ComplexMatrix{{1.0, 2.0}, {3.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(circle_matrix_decomposition(pauli(2)), InvalidArgument);
  CHECK_THROWS_AS(circle_matrix_decomposition(ComplexMatrix::zeros(3)), InvalidArgument);
}
