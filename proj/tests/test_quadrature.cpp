#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/mu.hpp"
#include "ladderlab/quadrature.hpp"
#include "ladderlab/zeta.hpp"
#include "reference_values.hpp"

using namespace ladderlab;
using ladderlab::testing::fixture_table;

// Stated expectations that the computed values contradict. Kept as written.
TEST_SUITE("claims") {
  TEST_CASE("int_1000^1001 Z^2 within 25% of ln 1000") {
    CHECK(std::abs(interval_integral(1000.0, 1001.0) - std::log(1000.0)) <= 0.25 * std::log(1000.0));
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("knots and monotonicity") {
    const CumulativeTable& t = fixture_table();
    REQUIRE(t.t().front() == 0.0);
    CHECK(t.I().front() == 0.0);
    CHECK(t.t().back() == t.t_max());
    for (std::size_t k = 1; k < t.t().size(); ++k) {
      CHECK(t.t()[k] > t.t()[k - 1]);
      CHECK(t.I()[k] >= t.I()[k - 1]);
      CHECK(t.t()[k] - t.t()[k - 1] <= knot_step(t.t()[k - 1], t.meta().max_step) + 1e-9);
    }
    CHECK(knot_step(10.0, 5.0) == 1.0);
    CHECK(knot_step(5000.0, 5.0) == 5.0);
    CHECK(knot_step(5000.0, 2.0) == 2.0);
  }

  TEST_CASE("I(T) against arbitrary-precision quadrature") {
    for (const auto& p : reference::hl_points) {
      CAPTURE(p.T);
      CHECK(std::abs(hl_integral(p.T, fixture_table()) - p.I) <= 1e-9 * p.I);
    }
  }

  TEST_CASE("small-T values") {
    CHECK(hl_integral(0.0, fixture_table()) == 0.0);
    const double c = 0.57721566490153286;
    const double main = 100.0 * std::log(100.0) + (2.0 * c - 1.0 - std::log(kTwoPi)) * 100.0;
    CHECK(main == doctest::Approx(292.2).epsilon(1e-3));
    CHECK(std::abs(hl_integral(100.0, fixture_table()) - main) <= 0.03 * main);
    // mpmath, 20 digits
    CHECK(interval_integral(1000.0, 1001.0) == doctest::Approx(4.5738926536115311).epsilon(1e-10));
  }

  TEST_CASE("additivity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 5000.0);
    for (int i = 0; i < 5; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      const double lhs = hl_integral(b, fixture_table());
      const double rhs = hl_integral(a, fixture_table()) + interval_integral(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(std::abs(lhs - rhs) <= 2.0 * kDefaultAbsTol * std::max(1.0, lhs) + 2e-9 * lhs);
    }
  }

  TEST_CASE("I(T) against direct adaptive quadrature") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(10.0, 2000.0);
    for (int i = 0; i < 5; ++i) {
      const double T = u(rng);
      const double direct = interval_integral(0.0, T);
      CAPTURE(T);
      CHECK(std::abs(hl_integral(T, fixture_table()) - direct) <= 1e-9 * direct);
    }
  }

  TEST_CASE("A calibration") {
    const CumulativeTable& t = fixture_table();
    CHECK(t.meta().A_observed > 1.0);
    CHECK(t.meta().A_observed < 3.0);
    CHECK(t.A() == doctest::Approx(kTailSafety * t.meta().A_observed));
    CHECK(t.B() == doctest::Approx(t.A() * t.A() / std::sqrt(2.0 * std::exp(1.0))));
  }

  TEST_CASE("serial and parallel builds are bitwise identical") {
    const CumulativeTable a = build_checkpoints(2000.0, kDefaultMaxStep, kDefaultRelTol, Execution::serial);
    const CumulativeTable b = build_checkpoints(2000.0, kDefaultMaxStep, kDefaultRelTol, Execution::parallel);
    REQUIRE(a.t().size() == b.t().size());
    for (std::size_t k = 0; k < a.t().size(); ++k) {
      CHECK(a.t()[k] == b.t()[k]);
      CHECK(a.I()[k] == b.I()[k]);
    }
    for (std::size_t k = 0; k < a.intervals(); ++k)
      for (int j = 0; j < kMomentCount; ++j) CHECK(a.moments(k)[j] == b.moments(k)[j]);
  }

  TEST_CASE("serial and parallel long integrals are bitwise identical") {
    CHECK(interval_integral(20000.0, 20300.0, 1e-12, Execution::serial) ==
          interval_integral(20000.0, 20300.0, 1e-12, Execution::parallel));
  }

  TEST_CASE("extension equals a direct build") {
    const CumulativeTable base = build_checkpoints(1502.5);
    const CumulativeTable ext = extend_checkpoints(base, 3000.0);
    const CumulativeTable direct = build_checkpoints(3000.0);
    REQUIRE(ext.t().size() == direct.t().size());
    for (std::size_t k = 0; k < ext.t().size(); ++k) {
      CHECK(ext.t()[k] == direct.t()[k]);
      CHECK(ext.I()[k] == direct.I()[k]);
    }
    CHECK(ext.meta().A_observed == direct.meta().A_observed);
  }

  TEST_CASE("range and domain errors") {
    CHECK_THROWS_AS(hl_integral(ladderlab::testing::kFixtureTMax + 1.0, fixture_table()), RangeError);
    CHECK_THROWS_AS(build_checkpoints(-1.0), DomainError);
    CHECK_THROWS_AS(interval_integral(5.0, 1.0), DomainError);
    try {
      hl_integral(40000.0, fixture_table());
    } catch (const RangeError& e) {
      CHECK(e.required() >= 40000.0);
    }
  }

  TEST_CASE("weighted integral matches direct quadrature") {
    const MuSpec mu = MuSpec::k_log(7.0);
    for (double y : {150.0, 400.0, 1200.0}) {
      const WeightedIntegralResult w = weighted_integral(y, mu, fixture_table());
      const double direct = integrate_z2_exp(0.0, w.truncation_point, y, 1e-12);
      CAPTURE(y);
      CHECK(std::abs(w.value - direct) <= 1e-9 * w.value);
      CHECK(w.truncation_point <= w.mu_of_y);
      CHECK(w.truncation_err_bound <= w.abs_tol);
    }
  }

  TEST_CASE("Phi' against a finite difference") {
    const MuSpec mu = MuSpec::k_log(7.0);
    for (double y : {300.0, 900.0}) {
      const double h = 1e-3 * y;
      const double fd = (weighted_integral(y + h, mu, fixture_table()).value -
                         weighted_integral(y - h, mu, fixture_table()).value) /
                        (2.0 * h);
      CAPTURE(y);
      CHECK(weighted_integral_derivative(y, mu, fixture_table()) == doctest::Approx(fd).epsilon(1e-5));
    }
  }

  TEST_CASE("tail integral is the complement of a finite range") {
    const double y = 200.0, m = 1400.0;
    const double tail = tail_integral(m, y);
    const double part = integrate_z2_exp(m, m + 1400.0, y, 1e-12);
    CHECK(std::abs(tail - part) <= 1e-5 * tail);
    CHECK(tail_integral(1e6, 100.0) == 0.0);
  }

  TEST_CASE("required_t_max covers the truncation point") {
    const MuSpec mu = MuSpec::k_log(7.0);
    const double need = required_t_max(1500.0, mu, fixture_table().B());
    CHECK(need <= ladderlab::testing::kFixtureTMax);
    CHECK(truncation_point(1500.0, mu, fixture_table()) <= need);
  }
}
