#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ladderlab/asymptotics.hpp"
#include "ladderlab/errors.hpp"

using namespace ladderlab;

TEST_SUITE("asymptotics") {
  TEST_CASE("constant identities") {
    const Constants k = make_constants();
    CHECK(k.c == doctest::Approx(0.5772156649015329).epsilon(1e-16));
    CHECK(std::abs(k.E - k.D - std::log(2.0)) < 1e-15);
    CHECK(std::abs(k.a + k.E + 1.0) < 1e-15);
    CHECK(k.eps0 == doctest::Approx(1.0 / 108.0));
    CHECK_FALSE(k.c0.has_value());
  }

  TEST_CASE("F needs a fitted c0") {
    const Constants k = make_constants();
    CHECK_THROWS_AS(F(1000.0, k), StateError);
    const Constants kc = k.with_c0({0.25, 0.01});
    CHECK(F(1000.0, kc) == doctest::Approx(500.0 * std::log(500.0) + kc.E * 500.0 + 0.25));
  }

  TEST_CASE("F' is the derivative of F; the printed form differs by (E+1)/2") {
    const Constants k = make_constants().with_c0({0.0, 0.0});
    for (double y : {300.0, 3000.0}) {
      const double h = 1e-3;
      CHECK(F_prime(y, k) == doctest::Approx((F(y + h, k) - F(y - h, k)) / (2 * h)).epsilon(1e-9));
      CHECK(F_prime_printed(y, k) - F_prime(y, k) == doctest::Approx((k.E + 1.0) / 2.0));
    }
  }

  TEST_CASE("F against the integral of F'") {
    const Constants k = make_constants().with_c0({0.3, 0.0});
    const double e = std::exp(1.0);
    const double direct = F(2.0 * e, k) - F(2.0, k);
    // Simpson on F' over [2, 2e]; F' is smooth so 2000 panels are plenty.
    const int n = 2000;
    const double a = 2.0, b = 2.0 * e, h = (b - a) / n;
    double s = F_prime(a, k) + F_prime(b, k);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * F_prime(a + i * h, k);
    CHECK(std::abs(direct - s * h / 3.0) < 1e-9);
    CHECK(F(1e8, k) / (0.5e8 * std::log(0.5e8)) == doctest::Approx(1.0).epsilon(0.1));
  }

  TEST_CASE("reference formula values") {
    const Constants k = make_constants();
    CHECK(balasubramanian(1.0, k) == doctest::Approx(-1.6835).epsilon(1e-4));
    CHECK(balasubramanian(1e12, k) / (1e12 * std::log(1e12)) == doctest::Approx(1.0).epsilon(0.07));
    CHECK(gauss_li_expansion(std::exp(10.0), 1) == doctest::Approx(0.1));
    CHECK(x_of_T(500.0, 1000.0) == 0.0);
    CHECK(pi_approx(500.0, 1000.0, k) == 0.0);
  }

  TEST_CASE("chord slope tends to phi'/2") {
    const Constants k = make_constants();
    const LadderSolver S(ladderlab::testing::fixture_table(), MuSpec::k_log(7.0));
    const double T = 612.3;
    CHECK(tangent_alpha(T, 1e-4, S, k) == doctest::Approx(0.5 * S.phi_derivative(T)).epsilon(1e-3));
  }

  TEST_CASE("TKA residual is small against the main term") {
    const Constants k = make_constants().with_c0({3.14, 0.0});
    const double main = tka_main_term(1e-3, k);
    CHECK(main == doctest::Approx(3453.9 + 500.0 * k.D + 3.14).epsilon(1e-4));
    CHECK(std::abs(tka_truncated_check(1e-3, ladderlab::testing::fixture_table(), k)) < 1e-3 * main);
  }

  TEST_CASE("balasubramanian minus omega") {
    const Constants k = make_constants();
    for (double T : {500.0, 1e4}) CHECK(balasubramanian(T, k) - omega_fn(T, k) == doctest::Approx((k.c - 1.0) * T));
  }

  TEST_CASE("Gauss expansion approaches the mean of 1/ln") {
    const double mean = gauss_li_mean(1e6);
    CHECK(std::abs(gauss_li_expansion(1e6, 6) - mean) < std::abs(gauss_li_expansion(1e6, 1) - mean));
    CHECK_THROWS_AS(gauss_li_expansion(1.5, 2), DomainError);
  }

  TEST_CASE("c0 estimator") {
    const Constants k = make_constants();
    std::vector<double> T, I, phi;
    for (double t : {100.0, 200.0, 400.0, 800.0, 1000.0, 1200.0}) {
      const double y = 1.9 * t;
      T.push_back(t);
      phi.push_back(y);
      I.push_back(0.5 * y * std::log(0.5 * y) + k.E * 0.5 * y + 0.75);
    }
    const C0Fit f = estimate_c0(T, I, phi, k);
    CHECK(f.value == doctest::Approx(0.75));
    CHECK(f.uncertainty < 1e-9);
    CHECK_THROWS_AS(estimate_c0(std::span(T).first(3), std::span(I).first(3), std::span(phi).first(3), k),
                    PreconditionError);
  }

  TEST_CASE("tangent preconditions") {
    const Constants k = make_constants();
    const LadderSolver S(ladderlab::testing::fixture_table(), MuSpec::k_log(7.0));
    CHECK_THROWS_AS(tangent_alpha(500.0, 0.0, S, k), DomainError);
    CHECK_THROWS_AS(tangent_law(500.0, 20.0, S, k), DomainError);
    CHECK_NOTHROW(tangent_alpha(500.0, 20.0, S, k));
    const double slope = tangent_alpha(500.0, 7.0, S, k);
    CHECK(slope == doctest::Approx((S.phi(507.0) - S.phi(500.0)) / 14.0).epsilon(1e-12));
  }

  TEST_CASE("TKA delta range") {
    const Constants k = make_constants().with_c0({0.0, 0.0});
    CHECK_THROWS_AS(tka_truncated_check(0.5, ladderlab::testing::fixture_table(), k), DomainError);
  }
}
