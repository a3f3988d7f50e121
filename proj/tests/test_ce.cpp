#include "tfc8/ce.hpp"
#include "tfc8/errors.hpp"
#include "tfc8/problems.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tfc8;
using namespace tfc8::testing;

namespace {

// Published [0, 1] switching functions, ascending degree.
const double kBetaUnit[8][8] = {
    {1, 0, 0, 0, -35, 84, -70, 20},
    {0, 0, 0, 0, 35, -84, 70, -20},
    {0, 1, 0, 0, -20, 45, -36, 10},
    {0, 0, 0, 0, -15, 39, -34, 10},
    {0, 0, 0.5, 0, -5, 10, -7.5, 2},
    {0, 0, 0, 0, 2.5, -7, 6.5, -2},
    {0, 0, 0, 1.0 / 6, -2.0 / 3, 1, -2.0 / 3, 1.0 / 6},
    {0, 0, 0, 0, -1.0 / 6, 0.5, -0.5, 1.0 / 6},
};

Eigen::VectorXd random_xi(int m) {
  Eigen::VectorXd xi(m);
  for (int j = 0; j < m; ++j) xi[j] = uniform(-1.0, 1.0);
  return xi;
}

ConstrainedExpression ce_for(const BvpProblem& p, int m = 10,
                             SwitchingMode mode = SwitchingMode::closed_form) {
  return build_ce(BasisSet(m, DomainMap(p.x_i(), p.x_f())), p.bc, mode);
}

}  // namespace

TEST_CASE("closed-form switching functions on [0,1] match the published polynomials") {
  const auto sw = build_switching_closed_form(0.0, 1.0);
  for (int j = 0; j < 8; ++j) {
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(sw.coeffs()(j, k) - kBetaUnit[j][k]) <= 1e-15 * std::abs(kBetaUnit[j][k]));
    }
  }
  const Vector8d at0 = sw.eval(0.0, 0);
  CHECK(at0 == Vector8d::Unit(0));
  CHECK(sw.eval(1.0, 0)[0] == 0.0);
  CHECK(sw.eval(0.0, 1)[0] == 0.0);
  // beta_2(1/2) = 1/2 by symmetry of the two-point Hermite problem.
  CHECK(sw.eval(0.5, 0)[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sw.eval(0.37, 8).isZero(0.0));
}

TEST_CASE("linear-solve switching functions agree with the closed form") {
  const auto closed = build_switching_closed_form(0.0, 1.0);
  const auto solved = build_switching_linear_solve(0.0, 1.0);
  CHECK((closed.coeffs() - solved.coeffs()).cwiseAbs().maxCoeff() <= 1e-10);

  SUBCASE("20 random domains") {
    for (int i = 0; i < 20; ++i) {
      const double x_i = uniform(-1.0, 1.0);
      const double x_f = x_i + uniform(0.1, 5.0);
      const Matrix8d a = build_switching_closed_form(x_i, x_f).coeffs();
      const Matrix8d b = build_switching_linear_solve(x_i, x_f).coeffs();
      for (int j = 0; j < 8; ++j) {
        const double scale = a.row(j).cwiseAbs().maxCoeff();
        CAPTURE(x_i);
        CAPTURE(x_f);
        CAPTURE(j);
        CHECK((a.row(j) - b.row(j)).cwiseAbs().maxCoeff() <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("beta_7 on [-1, 1]") {
  for (auto mode : {SwitchingMode::closed_form, SwitchingMode::linear_solve}) {
    const auto sw = build_switching(-1.0, 1.0, mode);
    for (int i = 0; i < 20; ++i) {
      const double x = uniform(-1.0, 1.0);
      const double expected = std::pow(x - 1.0, 4) * std::pow(x + 1.0, 3) / 96.0;
      CHECK(std::abs(sw.eval(x, 0)[6] - expected) <= 1e-14);
    }
  }
}

TEST_CASE("Kronecker property of the stored coefficients") {
  const double p5 = std::exp(0.5) - 1.0;
  for (auto [x_i, x_f] : {std::pair{0.0, 1.0}, std::pair{0.0, p5}, std::pair{-2.0, 3.0}}) {
    for (auto mode : {SwitchingMode::closed_form, SwitchingMode::linear_solve}) {
      const auto sw = build_switching(x_i, x_f, mode);
      const double scale = sw.coeffs().cwiseAbs().maxCoeff();
      CAPTURE(x_f);
      CHECK((sw.kronecker_matrix() - Matrix8d::Identity()).cwiseAbs().maxCoeff() <=
            1e-10 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("switching construction rejects degenerate domains") {
  CHECK_THROWS_AS(build_switching_closed_form(1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(build_switching_linear_solve(2.0, 1.0), ConfigError);
  CHECK_THROWS_AS(build_switching_closed_form(0.0, 1.0).eval(0.5, 9), ContractViolation);
}

TEST_CASE("xi = 0 gives the interpolating polynomial b(x)") {
  const auto p1 = problem_1().problem;
  const auto ce = ce_for(p1);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(ce.m());
  CHECK(ce.eval(0.0, 0, zero) == 1.0);
  CHECK(ce.eval(1.0, 0, zero) == 0.0);
  CHECK(ce.eval(1.0, 3, zero) == doctest::Approx(-3.0 * std::numbers::e).epsilon(1e-14));

  const auto p5 = problem_5().problem;
  const auto ce5 = ce_for(p5);
  CHECK(ce5.eval(p5.x_f(), 0, Eigen::VectorXd::Zero(10)) == doctest::Approx(0.5).epsilon(1e-14));

  SUBCASE("degree <= 7: ninth difference vanishes") {
    const auto p4 = problem_4().problem;
    const auto c4 = ce_for(p4);
    std::vector<double> v;
    for (int k = 0; k < 12; ++k) v.push_back(c4.eval(k / 11.0, 0, Eigen::VectorXd::Zero(10)));
    double scale = 0.0;
    for (double s : v) scale = std::max(scale, std::abs(s));
    for (int pass = 0; pass < 9; ++pass) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      v.pop_back();
    }
    for (double d : v) CHECK(std::abs(d) <= 1e-9 * scale);
  }
}

TEST_CASE("constraints hold for random xi on every benchmark") {
  for (int id = 1; id <= kNumBenchmarks; ++id) {
    const auto p = benchmark(id).problem;
    for (auto mode : {SwitchingMode::closed_form, SwitchingMode::linear_solve}) {
      const auto ce = ce_for(p, 10, mode);
      for (int draw = 0; draw < 100; ++draw) {
        const Eigen::VectorXd xi = random_xi(ce.m());
        for (int d = 0; d < 4; ++d) {
          const double l = p.bc.left_values[d];
          const double r = p.bc.right_values[d];
          CHECK(std::abs(ce.eval(p.x_i(), d, xi) - l) <= 1e-12 * (1.0 + std::abs(l)));
          CHECK(std::abs(ce.eval(p.x_f(), d, xi) - r) <= 1e-12 * (1.0 + std::abs(r)));
        }
      }
    }
  }
}

TEST_CASE("a(x) vanishes at constraint locations") {
  const auto ce = ce_for(problem_2().problem);
  CHECK(ce.a_row(0.0, 0).isZero(0.0));
  CHECK(ce.a_row(1.0, 3).isZero(0.0));
  for (int d = 0; d < 4; ++d) {
    CHECK(ce.a_row(0.0, d).isZero(0.0));
    CHECK(ce.a_row(1.0, d).isZero(0.0));
  }
}

TEST_CASE("y is linear in xi") {
  const auto ce = ce_for(problem_4().problem);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(ce.m());
  for (double x : {0.13, 0.5, 0.91}) {
    for (int d = 0; d <= 8; ++d) {
      const Eigen::VectorXd a = ce.a_row(x, d);
      const double base = ce.eval(x, d, zero);
      for (int j = 0; j < ce.m(); ++j) {
        const Eigen::VectorXd e = Eigen::VectorXd::Unit(ce.m(), j);
        CHECK(std::abs((ce.eval(x, d, e) - base) - a[j]) <= 1e-12 * std::max(1.0, std::abs(a[j])));
      }
      CHECK(base == ce.b(x, d));
    }
  }
}

TEST_CASE("cached rows are identical to direct evaluation") {
  const auto ce = ce_for(problem_5().problem, 12);
  const Eigen::VectorXd xi = random_xi(12);
  for (double x : {0.0, 0.2, 0.4, std::exp(0.5) - 1.0}) {
    const CeRows rows = ce.rows(x);
    const auto y = ce.state(x, xi);
    for (int d = 0; d <= 8; ++d) {
      CHECK((rows.a.row(d).transpose() - ce.a_row(x, d)).norm() == 0.0);
      CHECK(rows.b[d] == ce.b(x, d));
      CHECK(y[d] == doctest::Approx(ce.eval(x, d, xi)).epsilon(1e-14));
    }
  }
}

TEST_CASE("derivative chain: order p matches finite differences of order p-1") {
  const auto ce = ce_for(problem_6().problem);
  const Eigen::VectorXd xi = random_xi(ce.m()) * 1e-3;
  const double h = 1e-6;
  for (int i = 0; i < 10; ++i) {
    const double x = uniform(0.05, 0.95);
    for (int p = 1; p <= 8; ++p) {
      const double fd = central_difference([&](double t) { return ce.eval(t, p - 1, xi); }, x, h);
      const double exact = ce.eval(x, p, xi);
      CAPTURE(p);
      CHECK(close_rel(fd, exact, 1e-5, 1e-5));
    }
  }
}

TEST_CASE("problem 4 initial guess is accurate to about 1e-7") {
  const auto p = problem_4().problem;
  const auto ce = ce_for(p);
  const double err = std::abs(ce.eval(0.5, 0, Eigen::VectorXd::Zero(10)) - std::exp(0.5));
  CHECK(err > 1e-9);
  CHECK(err < 1e-6);
}

TEST_CASE("constrained expression contract checks") {
  const auto p1 = problem_1().problem;
  CHECK_THROWS_AS(build_ce(BasisSet(10, DomainMap(0.0, 2.0)), p1.bc), ConfigError);
  const auto ce = ce_for(p1);
  CHECK_THROWS_AS(ce.eval(1.5, 0, Eigen::VectorXd::Zero(10)), ContractViolation);
  CHECK_THROWS_AS(ce.eval(0.5, 9, Eigen::VectorXd::Zero(10)), ContractViolation);
  CHECK_THROWS_AS(ce.eval(0.5, 0, Eigen::VectorXd::Zero(3)), ContractViolation);

  BoundaryConditions bad = p1.bc;
  bad.left_values[2] = std::nan("");
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}
