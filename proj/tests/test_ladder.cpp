#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/zeta.hpp"

using namespace ladderlab;
using ladderlab::testing::fixture_table;

namespace {

const LadderSolver& solver7() {
  static const LadderSolver s(fixture_table(), MuSpec::k_log(7.0));
  return s;
}

}  // namespace

TEST_SUITE("ladder") {
  TEST_CASE("grids") {
    const auto g = geometric_grid(200.0, 20000.0, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 200.0);
    CHECK(g[1] == doctest::Approx(2000.0));
    CHECK(g[2] == 20000.0);
    const auto l = linear_grid(1.0, 2.0, 5);
    CHECK(l[1] == 1.25);
    CHECK(l.back() == 2.0);
  }

  TEST_CASE("M solves the defining equation inside (y/2, y)") {
    const LadderSolver& S = solver7();
    for (double y : geometric_grid(150.0, 1500.0, 8)) {
      const double M = S.solve_M(y);
      const double Phi = S.Phi(y);
      CAPTURE(y);
      CHECK(M > 0.5 * y);
      CHECK(M < y);
      CHECK(std::abs(hl_integral(M, fixture_table()) - Phi) <= tol_eq(Phi));
    }
  }

  TEST_CASE("defining equation at the example points") {
    const LadderSolver& S = solver7();
    for (double y : {200.0, 1000.0}) {
      const double Phi = S.Phi(y);
      CHECK(std::abs(hl_integral(S.solve_M(y), fixture_table()) - Phi) <= tol_eq(Phi));
    }
    CHECK(std::abs(S.phi(S.solve_M(300.0)) - 300.0) <= tol_inv(300.0));
  }

  TEST_CASE("single-member beam has no spread") {
    const std::vector<double> ys = {150.0, 300.0}, Ts = {300.0, 600.0};
    const BeamReport b = beam_experiment(fixture_table(), {MuSpec::beam(0.5, 1)}, ys, Ts);
    for (double s : b.spread) CHECK(s == 0.0);
    CHECK_THROWS_AS(beam_experiment(fixture_table(), {MuSpec::k_log(7.0)}, ys, Ts), PreconditionError);
  }

  TEST_CASE("phi inverts M") {
    const LadderSolver& S = solver7();
    for (double y : {180.0, 640.0, 1400.0}) {
      const double T = S.solve_M(y);
      CAPTURE(y);
      CHECK(std::abs(S.phi(T) - y) <= tol_inv(y));
    }
  }

  TEST_CASE("domain start") {
    const LadderSolver& S = solver7();
    CHECK(S.T0() == doctest::Approx(S.solve_M(100.0)));
    CHECK(S.phi(S.T0()) == 100.0);
    CHECK_THROWS_AS(S.phi(0.5 * S.T0()), BelowDomainStart);
    try {
      S.phi(10.0);
    } catch (const BelowDomainStart& e) {
      CHECK(e.T0() == S.T0());
    }
    CHECK(S.y_max() > 1500.0);
    CHECK_THROWS_AS(S.phi(2000.0), RangeError);
  }

  TEST_CASE("build omits points below T0 and matches the serial path") {
    const LadderSolver& S = solver7();
    const std::vector<double> grid = {10.0, 100.0, 200.0, 400.0, 700.0};
    const LadderTable a = S.build(grid, Execution::serial);
    const LadderTable b = S.build(grid, Execution::parallel);
    CHECK(a.omitted.size() == 1);
    REQUIRE(a.points.size() == 4);
    REQUIRE(b.points.size() == 4);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].phi == b.points[i].phi);
      CHECK(std::abs(a.points[i].residual) <= tol_eq(S.Phi(a.points[i].phi)));
      if (i) CHECK(a.points[i].phi > a.points[i - 1].phi);
    }
  }

  TEST_CASE("phi' against finite differences at generic points") {
    const LadderSolver& S = solver7();
    for (double T : {123.4, 210.7, 333.3, 456.1, 701.9}) {
      const double h = 1e-3;
      const double fd = (S.phi(T + h) - S.phi(T - h)) / (2.0 * h);
      CAPTURE(T);
      CHECK(S.phi_derivative(T) == doctest::Approx(fd).epsilon(1e-4));
    }
  }

  TEST_CASE("phi is flat at zeros of Z") {
    const LadderSolver& S = solver7();
    for (const ZeroRecord& z : find_zeros(S.T0() + 1.0, S.T0() + 40.0)) {
      CAPTURE(z.gamma);
      CHECK(S.phi_derivative(z.gamma) < 1e-6);
    }
  }

  TEST_CASE("gap between members") {
    const LadderSolver& S = solver7();
    const LadderSolver S9(fixture_table(), MuSpec::k_log(9.0));
    const GapResult self = ladder_gap(S, S, 500.0);
    CHECK(self.gap == 0.0);
    const GapResult g = ladder_gap(S, S9, 500.0);
    CHECK(g.phi1 > 500.0);
    CHECK(std::abs(g.gap) < 1e-6);
  }
}
