// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Builds its own checkpoint table in a scratch directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ladderlab/asymptotics.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/series.hpp"
#include "ladderlab/sieve.hpp"
#include "ladderlab/verify.hpp"
#include "ladderlab/zeta.hpp"
#include "reference_values.hpp"

using namespace ladderlab;
namespace fs = std::filesystem;

namespace {

constexpr double kZTol = 1e-8;
constexpr double kZeroTol = 1e-8;
constexpr double kQuadRelTol = 1e-7;
constexpr double kEqTol = 1e-8;
constexpr double kInvTol = 1e-9;
constexpr double kGrowth = 2.0;
constexpr double kCriticalTol = 1e-6;
constexpr double kPrimeRelMax = 0.12;
constexpr double kTangentRatioMax = 0.05;
constexpr double kSlopeTol = 0.2;
constexpr std::uint32_t kSeed = 20240611u;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<Outcome()>& fn) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0.0 && s > budget_s) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(budget_s)) + " s budget";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %-34s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), s, o.detail.c_str());
  std::fflush(stdout);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + num(v[i]);
  return s + "]";
}

}  // namespace

int main() {
  const fs::path scratch = fs::temp_directory_path() / "ladderlab-acceptance";
  fs::remove_all(scratch);
  RunConfig cfg;
  cfg.out_dir = scratch;
  std::ostringstream log;
  Workspace ws(cfg, log);
  const Constants k = make_constants();

  run(1, "Z engine against the oracle", 60.0, [&] {
    double zerr = 0.0, gerr = 0.0;
    for (const auto& p : reference::z_random) zerr = std::max(zerr, std::abs(z(p.t).value - p.z));
    const auto zs = find_zeros(0.0, 50.0);
    if (zs.size() != reference::first_zeros.size()) return Outcome{false, "found " + std::to_string(zs.size()) + " zeros below 50"};
    for (std::size_t i = 0; i < zs.size(); ++i) gerr = std::max(gerr, std::abs(zs[i].gamma - reference::first_zeros[i]));
    return Outcome{zerr <= kZTol && gerr <= kZeroTol, "max|Z err| " + num(zerr) + ", max|gamma err| " + num(gerr)};
  });

  const auto t_build = Clock::now();
  const CumulativeTable& table = ws.table();
  std::printf("     table to t = %.0f (%zu knots) in %.1f s\n", table.t_max(), table.t().size(),
              std::chrono::duration<double>(Clock::now() - t_build).count());

  run(2, "checkpoints against direct quadrature", 300.0, [&] {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> u(1.0, 2000.0);
    double worst = 0.0, anchor = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double T = u(rng);
      const double direct = interval_integral(0.0, T);
      worst = std::max(worst, std::abs(hl_integral(T, table) - direct) / direct);
    }
    // Both sides share the Z engine; the arbitrary-precision anchors do not.
    for (const auto& p : reference::hl_points) anchor = std::max(anchor, std::abs(hl_integral(p.T, table) - p.I) / p.I);
    return Outcome{worst <= kQuadRelTol && anchor <= kQuadRelTol,
                   "max rel diff " + num(worst) + ", vs mpmath at T = 50, 200: " + num(anchor)};
  });

  const LadderSolver& S7 = ws.solver(MuSpec::k_log(7.0));
  run(3, "defining equation and round trip", 1200.0, [&] {
    const auto ys = geometric_grid(200.0, 2e4, 40);
    double eq = 0.0, inv = 0.0;
    for (double y : ys) {
      const double M = S7.solve_M(y);
      const double Phi = S7.Phi(y);
      eq = std::max(eq, std::abs(hl_integral(M, table) - Phi) / Phi);
      inv = std::max(inv, std::abs(S7.phi(M) - y) / y);
    }
    return Outcome{eq <= kEqTol && inv <= kInvTol, "max eq/Phi " + num(eq) + ", max round trip/y " + num(inv)};
  });

  const LadderTable& ladder = ws.ladder();
  const C0Fit c0 = estimate_c0(ladder, table, k);
  const Constants kc = k.with_c0(c0);
  std::printf("     c0 = %.6f +- %.2g from %zu ladder points\n", c0.value, c0.uncertainty, ladder.points.size());

  run(4, "remainder of the main formula", 0.0, [&] {
    std::vector<double> scaled;
    for (double T : {1e3, 2e3, 4e3, 8e3}) {
      const double phi = S7.phi(T);
      scaled.push_back(std::abs(remainder_from(hl_integral(T, table), phi, kc)) * phi / std::log(phi));
    }
    const double T_top = ladder.points.back().T;
    double eF = 0.0, eB = 0.0;
    for (const LadderPoint& p : ladder.points) {
      if (p.T < T_top / 10.0) continue;
      const double I = hl_integral(p.T, table);
      eF = std::max(eF, std::abs(I - F(p.phi, kc)));
      eB = std::max(eB, std::abs(I - balasubramanian(p.T, k)));
    }
    const bool ok = no_growth(scaled, kGrowth) && eF < eB;
    return Outcome{ok, "|r| phi/ln phi " + list(scaled) + ", top decade max|I-F| " + num(eF) + " vs |I-bal| " + num(eB)};
  });

  run(5, "ladder spread across mu", 0.0, [&] {
    const std::vector<double> Ts = {500.0, 1000.0, 2000.0, 4000.0};
    const LadderSolver& S9 = ws.solver(MuSpec::k_log(9.0));
    std::vector<double> pair;
    for (double T : Ts) pair.push_back(std::abs(ladder_gap(S7, S9, T).gap) * T);
    std::vector<MuSpec> beam;
    for (double rho : {0.0, 0.5, 1.0}) beam.push_back(MuSpec::beam(rho, 1, 100.0));
    const BeamReport b = beam_experiment(table, beam, geometric_grid(150.0, 2e4, 12), Ts);
    const bool ok = no_growth(pair, kGrowth) && no_growth(b.spread_times_T, kGrowth);
    return Outcome{ok, "K7/K9 |dphi| T " + list(pair) + ", beam spread T " + list(b.spread_times_T)};
  });

  run(6, "sandwich 1.9T < phi < 2T", 0.0, [&] {
    std::vector<double> ratio;
    bool lower = true, upper = true;
    double holds_from = NAN;
    for (const LadderPoint& p : ladder.points) {
      if (p.T < 500.0) continue;
      upper = upper && p.phi < 2.0 * p.T;
      const bool ok = 1.9 * p.T < p.phi;
      lower = lower && ok;
      if (!ok) holds_from = NAN;
      else if (std::isnan(holds_from)) holds_from = p.T;
      ratio.push_back((2.0 * p.T - p.phi) * std::log(p.phi) / p.phi);
    }
    // One B' fitted on the lower half of the grid must serve the upper half.
    const std::size_t h = ratio.size() / 2;
    const double Bp = kGrowth * max_abs({ratio.begin(), ratio.begin() + h});
    bool sandwich = true;
    for (double r : ratio) sandwich = sandwich && r > 0.0 && r < Bp;
    std::string d = "phi/T at T=500: " + num(ladder.points.front().phi / ladder.points.front().T) + ", B' " + num(Bp);
    if (!lower) d += ", 1.9T < phi holds only from grid T = " + num(holds_from);
    return Outcome{lower && upper && sandwich, d};
  });

  run(7, "exact series coefficients", 1.0, [&] {
    const CoefficientSeries A = expansion_A(5);
    const CoefficientSeries B = expansion_B(5);
    const BiPoly a = BiPoly::monomial(1, 0, 1);
    const bool ok = A[1] == BiPoly::monomial(1, 1) && A[2].is_zero() && A[3] == BiPoly::monomial(Rational(1, 2), 2) &&
                    A[4] == BiPoly::monomial(Rational(1, 6), 3) &&
                    A[5] == BiPoly::monomial(Rational(1, 2), 3) + BiPoly::monomial(Rational(1, 12), 4) &&
                    B[2] == a * A[1] && B[3] == a * a * A[1] + A[3];
    return Outcome{ok, "A5 = " + A[5].to_string()};
  });

  run(8, "prime counting", 0.0, [&] {
    std::vector<double> rel;
    for (double T : {1e3, 3e3, 1e4}) {
      const double exact = static_cast<double>(sieve_pi(T));
      rel.push_back(std::abs(pi_approx(T, S7.phi(T), k) - exact) / exact);
    }
    const bool pi_ok = sieve_pi(1e4) == 1229;
    const bool ok = pi_ok && rel[1] < rel[0] && rel[2] < rel[1] && rel[2] < kPrimeRelMax;
    return Outcome{ok, "pi(1e4) = " + std::to_string(sieve_pi(1e4)) + ", rel err " + list(rel)};
  });

  run(9, "zeros are critical points of phi", 0.0, [&] {
    const auto zs = find_zeros(S7.T0(), 5000.0);
    double worst = 0.0;
    for (const ZeroRecord& z : zs) worst = std::max(worst, S7.phi_derivative(z.gamma));
    return Outcome{worst < kCriticalTol, std::to_string(zs.size()) + " zeros in (T0, 5000], max phi' " + num(worst)};
  });

  run(10, "truncated TKA identity", 0.0, [&] {
    std::vector<double> scaled;
    for (double inv : {500.0, 1000.0, 2000.0, 4000.0, 8000.0}) {
      const double d = 1.0 / inv;
      scaled.push_back(tka_truncated_check(d, table, kc) / (d * std::log(inv)));
    }
    return Outcome{no_growth(scaled, kGrowth), "residual/(delta ln 1/delta) " + list(scaled)};
  });

  run(11, "tangent law at T = 1e4", 0.0, [&] {
    const double T = 1e4;
    const TangentLaw tl = tangent_law(T, std::cbrt(T), S7, k);
    const double ratio = std::abs(tl.residual / tl.main_term);
    const double slope = tangent_alpha(T, std::pow(T, 1.0 / 3.0 + 2.0 * k.eps0), S7, k);
    const double W = std::pow(T, 1.0 / 3.0 + k.eps0);
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> pos(T, T + W - 1.0), len(0.05, 0.95);
    double C = 0.0, zmax = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double a = pos(rng), b = a + len(rng);
      C = std::max(C, std::abs(interval_integral(a, b) - (b - a) * std::log(T)) / (b - a));
    }
    for (double t = T; t <= T + W; t += 0.01) zmax = std::max(zmax, z_squared(t));
    const bool ok = ratio < kTangentRatioMax && std::abs(slope - 1.0) < kSlopeTol && C <= zmax + std::log(T);
    return Outcome{ok, "main-term ratio " + num(ratio) + ", slope at U0 " + num(slope) + ", C " + num(C)};
  });

  fs::remove_all(scratch);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
