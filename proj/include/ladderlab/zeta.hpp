#pragma once

#include <vector>

#include "ladderlab/execution.hpp"

namespace ladderlab {

struct ThetaValue {
  double t = 0.0;
  double value = 0.0;
  double abs_err_bound = 0.0;
};

struct ZValue {
  double t = 0.0;
  double value = 0.0;
  double abs_err_bound = 0.0;
};

struct ZeroRecord {
  int index = 0;               // ordinal of the zero counted from t = 0
  double gamma = 0.0;
  double bracket_width = 0.0;  // width of the final sign-change bracket
  double z_residual = 0.0;     // |Z(gamma)|
  bool tangential = false;     // |Z| dipped below z_tol without a sign change
};

enum class ZMethod {
  automatic,           // alternating series below 30, Euler-Maclaurin below 2500, then Riemann-Siegel
  alternating_series,  // Borwein's accelerated eta series
  euler_maclaurin,
  riemann_siegel,
};

inline constexpr double kAlternatingBelow = 30.0;
inline constexpr double kRiemannSiegelFrom = 2500.0;
inline constexpr double kThetaAsymptoticFrom = 10.0;

// Riemann-Siegel theta. Complex log-gamma below 10, the Stirling-type series above.
ThetaValue theta(double t);
ThetaValue theta_log_gamma(double t);
ThetaValue theta_asymptotic(double t);

ZValue z(double t);
ZValue z(double t, ZMethod method);
double z_squared(double t);

// Number of Riemann-Siegel correction terms C_0..C_{K} applied (K = 4).
inline constexpr int kRiemannSiegelCorrections = 5;

struct ZeroScanOptions {
  double z_tol = 1e-7;
  double step_fraction = 0.05;   // scan step as a fraction of the mean zero spacing
  double bracket_tol = 1e-9;
  Execution execution = Execution::parallel;
};

// All sign changes of Z on [t_lo, t_hi], refined by bracketing, plus flagged
// near-tangential minima. Indices count zeros from t = 0 only when t_lo = 0.
std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, const ZeroScanOptions& options = {});

// theta(T)/pi + 1, the smooth zero-counting estimate.
double zero_count_estimate(double T);

// Mean zero spacing 2 pi / ln(t / 2 pi), floored at ln = 1 for small t.
double mean_zero_spacing(double t);

}  // namespace ladderlab
