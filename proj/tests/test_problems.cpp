#include "tfc8/errors.hpp"
#include "tfc8/problems.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tfc8;
using namespace tfc8::testing;

namespace {

const double kE = std::numbers::e;

State exact_state(const BvpProblem& p, double x) {
  State y{};
  for (int d = 0; d <= 8; ++d) y[d] = p.exact(x, d);
  return y;
}

}  // namespace

TEST_CASE("problem 1") {
  const auto e = problem_1();
  CHECK(e.problem.exact(0.5, 0) == doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-15));
  CHECK(e.problem.bc.right_values[0] == 0.0);
  CHECK(std::abs(e.problem.residual(0.3, exact_state(e.problem, 0.3))) <= 1e-10);
  CHECK(e.problem.is_linear);
}

TEST_CASE("problem 2") {
  const auto e = problem_2();
  CHECK(e.problem.exact(0.0, 0) == 0.0);
  CHECK(e.problem.exact(1.0, 0) == 0.0);
  CHECK(e.problem.bc.right_values[3] == doctest::Approx(-9.0 * kE).epsilon(1e-15));
  CHECK(*e.reference_error_at(5) == 1.01e-08);
  CHECK_FALSE(e.reference_error_at(9).has_value());
}

TEST_CASE("problem 3") {
  const auto e = problem_3();
  CHECK(e.problem.bc.left_values[3] == 7.0);
  CHECK(e.problem.bc.right_values[1] == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-15));
  CHECK(e.problem.exact(1.0, 1) == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-14));
  CHECK(*e.reference_error_at(5) == 4.1e-10);
}

TEST_CASE("problem 4") {
  const auto e = problem_4();
  for (int d = 0; d < 4; ++d) {
    CHECK(e.problem.bc.left_values[d] == 1.0);
    CHECK(e.problem.bc.right_values[d] == kE);
  }
  CHECK(*e.reference_error_at(4) == 1.823902e-05);
  CHECK_FALSE(e.problem.is_linear);
}

TEST_CASE("problem 5") {
  const auto e = problem_5();
  CHECK(e.problem.x_f() == std::exp(0.5) - 1.0);
  CHECK(e.problem.bc.right_values[0] == 0.5);
  CHECK(e.problem.exact(0.0, 8) == doctest::Approx(-5040.0).epsilon(1e-15));
  CHECK(*e.reference_error_at(7) == 1.00e-05);
  CHECK(e.table_points.back() == e.problem.x_f());
}

TEST_CASE("problem 6") {
  const auto e = problem_6();
  CHECK(e.problem.x_f() == 1.0);
  CHECK(e.problem.bc.left_values == std::array<double, 4>{1.0, -1.0, 1.0, -1.0});
  for (int k = 0; k <= 8; ++k) {
    CHECK(e.problem.exact(1.0, k) == doctest::Approx(std::pow(-1.0, k) / kE).epsilon(1e-15));
  }
  CHECK(*e.reference_error_at(5) == 1.5e-10);
}

TEST_CASE("problem 7") {
  const auto e = problem_7();
  CHECK(e.problem.bc.right_values[1] == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-15));
  // Forcing at x = 0 is 14; the residual of the zero state is minus the forcing.
  CHECK(e.problem.residual(0.0, State{}) == doctest::Approx(-14.0).epsilon(1e-15));
  for (int i = 0; i < 10; ++i) {
    const double x = uniform(0.0, 1.0);
    CHECK(std::abs(e.problem.residual(x, exact_state(e.problem, x))) <= 1e-8);
  }
  CHECK(e.reference_errors.empty());
}

TEST_CASE("every benchmark: exact solution satisfies the stored boundary conditions") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto p = benchmark(id).problem;
    CAPTURE(id);
    for (int d = 0; d < 4; ++d) {
      CHECK(std::abs(p.exact(p.x_i(), d) - p.bc.left_values[d]) <= 1e-12);
      CHECK(std::abs(p.exact(p.x_f(), d) - p.bc.right_values[d]) <= 1e-12);
    }
  }
}

TEST_CASE("every benchmark: residual vanishes on the exact state") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto p = benchmark(id).problem;
    CAPTURE(id);
    for (int i = 0; i < 20; ++i) {
      const double x = uniform(p.x_i(), p.x_f());
      CHECK(std::abs(p.residual(x, exact_state(p, x))) <= 1e-8);
    }
  }
}

TEST_CASE("every benchmark: closed-form exact derivatives match finite differences") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto p = benchmark(id).problem;
    CAPTURE(id);
    for (int i = 0; i < 5; ++i) {
      const double x = uniform(p.x_i() + 0.01, p.x_f() - 0.01);
      for (int d = 1; d <= 8; ++d) {
        const double fd = central_difference([&](double t) { return p.exact(t, d - 1); }, x, 1e-6);
        CHECK(close_rel(fd, p.exact(x, d), 1e-6, 1e-6));
      }
    }
  }
}

TEST_CASE("every benchmark: analytic partials match finite differences") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto p = benchmark(id).problem;
    CAPTURE(id);
    for (int i = 0; i < 5; ++i) {
      const double x = uniform(p.x_i(), p.x_f());
      // Random states around the solution, where the residual stays O(1).
      State y = exact_state(p, x);
      for (double& v : y) v += uniform(-0.1, 0.1);
      const State analytic = p.partials(x, y);
      const State fd = finite_difference_partials(p.residual, x, y);
      for (int d = 0; d <= 8; ++d) CHECK(close_rel(fd[d], analytic[d], 1e-5, 1e-7));
    }
  }
}

TEST_CASE("linear benchmarks have state-independent partials") {
  for (int id : {1, 2, 3, 7}) {
    const auto p = benchmark(id).problem;
    REQUIRE(p.is_linear);
    const double x = uniform(p.x_i(), p.x_f());
    State a{}, b{};
    for (int d = 0; d <= 8; ++d) {
      a[d] = uniform(-2.0, 2.0);
      b[d] = uniform(-2.0, 2.0);
    }
    const State pa = p.partials(x, a);
    const State pb = p.partials(x, b);
    for (int d = 0; d <= 8; ++d) CHECK(std::abs(pa[d] - pb[d]) <= 1e-12);
  }
}

TEST_CASE("table points are 11 equidistant values spanning the domain") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto e = benchmark(id);
    REQUIRE(e.table_points.size() == 11);
    CHECK(e.table_points.front() == e.problem.x_i());
    CHECK(e.table_points.back() == e.problem.x_f());
    const double step = (e.problem.x_f() - e.problem.x_i()) / 10.0;
    for (int k = 1; k < 11; ++k) {
      CHECK(e.table_points[k] - e.table_points[k - 1] == doctest::Approx(step).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(benchmark(0), ConfigError);
  CHECK_THROWS_AS(benchmark(8), ConfigError);
}

TEST_CASE("derivative error report") {
  SUBCASE("problem 5, 30 terms, 100 points") {
    const auto r = derivative_error_report(problem_5(), 30, 100);
    CHECK(r[0] <= 1e-14);
    CHECK(r[7] <= 2e-9);
    CHECK(r[8] < r[7]);
  }
  SUBCASE("problem 5, 10 terms, 11 points is under-resolved") {
    const auto r = derivative_error_report(problem_5(), 10, 11);
    CHECK(r[8] >= 1e-3);
    CHECK(r[8] <= 1e-1);
  }
  SUBCASE("problem 7, 10 terms") {
    const auto r = derivative_error_report(problem_7(), 10, 11);
    CHECK(r[8] <= 1e-9);
  }
  SUBCASE("missing exact solution") {
    auto e = problem_1();
    e.problem.exact = nullptr;
    CHECK_THROWS_AS(derivative_error_report(e, 10, 11), ConfigError);
  }
}
