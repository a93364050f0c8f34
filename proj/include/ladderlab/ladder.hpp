#pragma once

#include <span>
#include <string>
#include <vector>

#include "ladderlab/execution.hpp"
#include "ladderlab/mu.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {

// Acceptance tolerances on the defining equation and on the inverse.
double tol_eq(double Phi);  // 1e-8 * max(1, Phi)
double tol_inv(double y);   // 1e-9 * y

struct LadderPoint {
  double T = 0.0;
  double phi = 0.0;
  double residual = 0.0;  // I(T) - Phi(phi)
};

struct LadderTable {
  MuSpec mu;
  double T0 = 0.0;
  std::vector<LadderPoint> points;
  std::vector<double> omitted;  // requested T below T0
};

// M(y) and its inverse phi(T) for one member of the class, over an immutable
// checkpoint table. Const methods are safe to call concurrently.
class LadderSolver {
 public:
  LadderSolver(const CumulativeTable& table, MuSpec mu);

  const MuSpec& mu() const { return mu_; }
  const CumulativeTable& table() const { return *table_; }

  WeightedIntegralResult weighted(double y) const { return weighted_integral(y, mu_, *table_); }
  double Phi(double y) const { return weighted(y).value; }
  double Phi_prime(double y) const { return weighted_integral_derivative(y, mu_, *table_); }

  // I(M) = Phi(y), bracketed in [y/2, y]. Throws BracketError with both
  // endpoint residuals, RangeError when the table is too short.
  double solve_M(double y) const;
  double T0() const { return T0_; }
  // Largest y whose Phi(y) the table covers.
  double y_max() const { return y_max_; }
  // Inverse of M; throws BelowDomainStart for T < T0.
  double phi(double T) const;
  // Z^2(T) / Phi'(phi(T)).
  double phi_derivative(double T) const;
  double residual(double T, double phi_value) const;

  LadderTable build(std::span<const double> T_grid, Execution execution = Execution::parallel) const;

 private:
  const CumulativeTable* table_;
  MuSpec mu_;
  double T0_ = 0.0;
  double y_max_ = 0.0;
};

struct GapResult {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double direct = 0.0;      // phi1 - phi2 from the truncated integrals
  double correction = 0.0;  // first-order effect of the parts cut off beyond the truncation points
  double gap = 0.0;         // direct + correction
};

// phi_1(T) - phi_2(T). When both weight cutoffs lie beyond the common
// truncation point the truncated ladders coincide, and the difference comes
// from int_{mu_2}^{mu_1} Z^2 e^{-2t/y}, divided by Phi'(y).
GapResult ladder_gap(const LadderSolver& s1, const LadderSolver& s2, double T);

struct BeamReport {
  std::vector<std::string> members;
  std::vector<double> y_grid;
  std::vector<double> T_grid;
  // Divergence of the input rays against the rho = 0 ray: the closed form as
  // printed, and the exact solution of u_0(y + D) = u_rho(y).
  std::vector<double> divergence_printed;
  std::vector<std::vector<double>> divergence_exact;  // [member][y]
  std::vector<std::vector<double>> phi;               // [member][T]
  std::vector<std::vector<double>> gap_to_first;      // [member][T], via ladder_gap
  std::vector<double> spread;                         // max pairwise |phi_i - phi_j|
  std::vector<double> spread_times_T;
};

BeamReport beam_experiment(const CumulativeTable& table, const std::vector<MuSpec>& members,
                           std::span<const double> y_grid, std::span<const double> T_grid);

// Geometric grid of `count` points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int count);
std::vector<double> linear_grid(double lo, double hi, int count);

}  // namespace ladderlab
