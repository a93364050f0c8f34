#include "ladderlab/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "parallel.hpp"
#include "ladderlab/roots.hpp"
#include "ladderlab/zeta.hpp"

namespace ladderlab {

namespace {

constexpr double kXtolRel = 1e-14;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double tol_eq(double Phi) { return 1e-8 * std::max(1.0, Phi); }
double tol_inv(double y) { return 1e-9 * y; }

LadderSolver::LadderSolver(const CumulativeTable& table, MuSpec mu) : table_(&table), mu_(std::move(mu)) {
  T0_ = solve_M(mu_.start());
  const double t_max = table_->t_max();
  auto covered = [&](double y) { return truncation_point(y, mu_, *table_) <= t_max; };
  double lo = mu_.start(), hi = t_max / 0.75;
  for (int i = 0; i < 100 && hi - lo > 1e-12 * hi; ++i) {
    const double m = 0.5 * (lo + hi);
    (covered(m) ? lo : hi) = m;
  }
  y_max_ = lo;
}

double LadderSolver::solve_M(double y) const {
  mu_.require_valid(y);
  const double target = Phi(y);
  const double lo = 0.5 * y, hi = y;
  if (hi > table_->t_max())
    throw RangeError("solve_M: bracket end " + fmt(hi) + " beyond checkpoints " + fmt(table_->t_max()), hi);
  const double f_lo = hl_integral(lo, *table_) - target;
  const double f_hi = hl_integral(hi, *table_) - target;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw BracketError("solve_M: I(t) - Phi(y) keeps its sign on [y/2, y] for y = " + fmt(y), f_lo, f_hi);
  }
  // Narrow to one knot interval by bisection on the stored I values.
  const auto t = table_->t();
  const auto I = table_->I();
  std::size_t a = table_->interval_of(lo), b = table_->interval_of(hi) + 1;
  while (b - a > 1) {
    const std::size_t m = (a + b) / 2;
    (I[m] <= target ? a : b) = m;
  }
  double x0 = std::max(lo, t[a]), x1 = std::min(hi, t[b]);
  double f0 = (x0 == lo) ? f_lo : I[a] - target;
  double f1 = (x1 == hi) ? f_hi : I[b] - target;
  if (f0 == 0.0) return x0;
  if (f1 == 0.0) return x1;
  auto f = [&](double x) { return hl_integral(x, *table_) - target; };
  return brent_root(f, x0, x1, f0, f1, kXtolRel * y).root;
}

double LadderSolver::phi(double T) const {
  if (!std::isfinite(T)) throw DomainError("phi: T must be finite");
  if (T < T0_) throw BelowDomainStart("phi: T = " + fmt(T) + " below the domain start T0 = " + fmt(T0_), T0_);
  const double target = hl_integral(T, *table_);
  const double start = mu_.start();
  if (T == T0_) return start;
  auto f = [&](double y) { return Phi(y) - target; };
  // Since y/2 < M(y) < y, phi(T) lies in (T, 2T). Try a narrow bracket around
  // the asymptotic guess first.
  const Constants k = make_constants();
  const double lnT = std::log(T);
  double lo = std::max(start, T), hi = std::min(2.0 * T, y_max_);
  if (!(hi > lo))
    throw RangeError("phi: checkpoints up to " + fmt(table_->t_max()) + " cover y <= " + fmt(y_max_) +
                         ", too short for T = " + fmt(T), required_t_max(2.0 * T, mu_, table_->B()));
  if (lnT - k.a > 2.0) {
    const double guess = 2.0 * T * (1.0 - k.q() / (lnT - k.a));
    const double g_lo = std::max(lo, 0.95 * guess), g_hi = std::min(hi, 1.05 * guess);
    if (g_lo < g_hi) {
      const double fl = f(g_lo), fh = f(g_hi);
      if (fl <= 0.0 && fh >= 0.0) {
        if (fl == 0.0) return g_lo;
        if (fh == 0.0) return g_hi;
        return brent_root(f, g_lo, g_hi, fl, fh, kXtolRel * g_hi).root;
      }
      if (fl > 0.0) hi = g_lo;
      if (fh < 0.0) lo = g_hi;
    }
  }
  const double fl = f(lo), fh = f(hi);
  if (fl == 0.0) return lo;
  if (fh == 0.0) return hi;
  if ((fl > 0.0) == (fh > 0.0)) throw BracketError("phi: Phi(y) - I(T) keeps its sign for T = " + fmt(T), fl, fh);
  return brent_root(f, lo, hi, fl, fh, kXtolRel * hi).root;
}

double LadderSolver::phi_derivative(double T) const {
  const double y = phi(T);
  return z_squared(T) / Phi_prime(y);
}

double LadderSolver::residual(double T, double phi_value) const {
  return hl_integral(T, *table_) - Phi(phi_value);
}

LadderTable LadderSolver::build(std::span<const double> T_grid, Execution execution) const {
  LadderTable out{mu_, T0_, {}, {}};
  std::vector<double> Ts;
  for (double T : T_grid) (T < T0_ ? out.omitted : Ts).push_back(T);
  std::sort(Ts.begin(), Ts.end());
  Ts.erase(std::unique(Ts.begin(), Ts.end()), Ts.end());
  out.points.resize(Ts.size());
  const long n = static_cast<long>(Ts.size());
  auto run = [&](long i) {
    const double y = phi(Ts[i]);
    out.points[i] = {Ts[i], y, residual(Ts[i], y)};
  };
  detail::for_each_index(n, execution, run);
  return out;
}

GapResult ladder_gap(const LadderSolver& s1, const LadderSolver& s2, double T) {
  if (&s1.table() != &s2.table()) throw PreconditionError("ladder_gap: both ladders must share one checkpoint table");
  const double T0 = std::max(s1.T0(), s2.T0());
  if (T < T0) throw BelowDomainStart("ladder_gap: T = " + fmt(T) + " below max(T0) = " + fmt(T0), T0);
  GapResult g;
  g.phi1 = s1.phi(T);
  g.phi2 = s2.phi(T);
  g.direct = g.phi1 - g.phi2;
  // Phi_mu(y) = Phi_trunc(y) + tail(tc) - tail(mu). Both truncated functions
  // are evaluated at the common y, so equal truncation points cancel.
  const double y = 0.5 * (g.phi1 + g.phi2);
  const CumulativeTable& table = s1.table();
  const double mu1 = s1.mu()(y), mu2 = s2.mu()(y);
  const double tc1 = truncation_point(y, s1.mu(), table), tc2 = truncation_point(y, s2.mu(), table);
  const bool cut1 = tc1 < mu1, cut2 = tc2 < mu2;
  double missing = 0.0;  // (Phi_true_1 - Phi_trunc_1) - (Phi_true_2 - Phi_trunc_2)
  if (cut1 || cut2) {
    auto tail = [&](double m) { return tail_integral(m, y); };
    if (cut1 && cut2 && tc1 == tc2) {
      missing = (mu1 == mu2) ? 0.0 : tail(mu2) - tail(mu1);
    } else {
      const double part1 = cut1 ? tail(tc1) - tail(mu1) : 0.0;
      const double part2 = cut2 ? tail(tc2) - tail(mu2) : 0.0;
      missing = part1 - part2;
    }
  }
  if (missing != 0.0) g.correction = -missing / s1.Phi_prime(y);
  g.gap = g.direct + g.correction;
  return g;
}

BeamReport beam_experiment(const CumulativeTable& table, const std::vector<MuSpec>& members,
                           std::span<const double> y_grid, std::span<const double> T_grid) {
  if (members.empty()) throw PreconditionError("beam_experiment: no members");
  for (const MuSpec& m : members) {
    if (m.family() != MuFamily::beam) throw PreconditionError("beam_experiment: " + m.name() + " is not a beam ray");
    if (m.y0() != members.front().y0() || m.n() != members.front().n())
      throw PreconditionError("beam_experiment: " + m.name() + " is not homocentric with " + members.front().name());
    for (double y : y_grid) {
      if (y < m.start()) throw PreconditionError("beam_experiment: " + m.name() + " invalid at y = " + fmt(y));
    }
  }
  BeamReport r;
  r.y_grid.assign(y_grid.begin(), y_grid.end());
  r.T_grid.assign(T_grid.begin(), T_grid.end());
  const double y0 = members.front().y0();
  const int n = members.front().n();
  for (double y : y_grid) {
    const double d = y - y0;
    r.divergence_printed.push_back(y * std::pow(d, n) / std::sqrt(1.0 + d * d));
  }
  std::vector<LadderSolver> solvers;
  for (const MuSpec& m : members) {
    r.members.push_back(m.name());
    std::vector<double> div;
    for (double y : y_grid) div.push_back(y * (std::sqrt(1.0 + m.rho() * std::pow(y - y0, n)) - 1.0));
    r.divergence_exact.push_back(std::move(div));
    solvers.emplace_back(table, m);
  }
  r.phi.assign(members.size(), std::vector<double>(T_grid.size()));
  r.gap_to_first.assign(members.size(), std::vector<double>(T_grid.size()));
  for (std::size_t j = 0; j < T_grid.size(); ++j) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const GapResult g = ladder_gap(solvers[i], solvers[0], T_grid[j]);
      r.phi[i][j] = g.phi1;
      r.gap_to_first[i][j] = g.gap;
    }
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      lo = std::min(lo, r.gap_to_first[i][j]);
      hi = std::max(hi, r.gap_to_first[i][j]);
    }
    r.spread.push_back(hi - lo);
    r.spread_times_T.push_back((hi - lo) * T_grid[j]);
  }
  return r;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 1 || !(lo > 0.0) || !(hi >= lo)) throw DomainError("geometric_grid: need count >= 1 and 0 < lo <= hi");
  std::vector<double> g(count);
  if (count == 1) return {lo};
  const double r = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(r * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1 || !(hi >= lo)) throw DomainError("linear_grid: need count >= 1 and lo <= hi");
  if (count == 1) return {lo};
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
  g.back() = hi;
  return g;
}

}  // namespace ladderlab
