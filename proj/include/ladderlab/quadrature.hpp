#pragma once

#include <span>
#include <string>
#include <vector>

#include "ladderlab/execution.hpp"
#include "ladderlab/mu.hpp"

namespace ladderlab {

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr double kDefaultMaxStep = 5.0;
inline constexpr double kFineStepBelow = 1000.0;  // knot step is capped at 1 below this
// Number of stored moments int Z^2 s^j over each knot interval, s in [0, 1].
inline constexpr int kMomentCount = 21;
inline constexpr double kCalibrationLo = 10.0;
inline constexpr double kCalibrationHi = 1e5;
inline constexpr double kTailSafety = 1.25;  // A = kTailSafety * max |Z| / t^{1/4}
inline constexpr const char* kEngineVersion = "ladderlab-zeta-1/gk15-panels-2";

// I(t) = int_0^t Z^2 at checkpoint knots, with per-interval moments for
// weighted integrals. Immutable once constructed.
class CumulativeTable {
 public:
  struct Meta {
    double t_max = 0.0;
    double max_step = kDefaultMaxStep;
    double rel_tol = kDefaultRelTol;
    double abs_tol = kDefaultAbsTol;
    std::string engine_version = kEngineVersion;
    double A_observed = 0.0;      // max |Z(t)| / t^{1/4} over quadrature nodes in the calibration range
    double calibration_hi = 0.0;  // upper end of the range A_observed covers
  };

  CumulativeTable() = default;
  // Validates knots[0] = (0, 0), strictly increasing t, nondecreasing I, step
  // limits, and moment count (moments may be empty).
  CumulativeTable(Meta meta, std::vector<double> t, std::vector<double> I, std::vector<double> moments);

  const Meta& meta() const { return meta_; }
  double t_max() const { return meta_.t_max; }
  double A() const { return kTailSafety * meta_.A_observed; }
  double B() const;  // A^2 / sqrt(2e)
  std::span<const double> t() const { return t_; }
  std::span<const double> I() const { return I_; }
  std::size_t intervals() const { return t_.empty() ? 0 : t_.size() - 1; }
  bool has_moments() const { return !moments_.empty(); }
  std::span<const double> moments(std::size_t k) const;
  // Index k of the interval with t_k <= t < t_{k+1}; the last interval for t = t_max.
  std::size_t interval_of(double t) const;
  // Smallest knot >= t (t_max when t exceeds it).
  double knot_at_or_above(double t) const;
  bool empty() const { return t_.empty(); }

 private:
  Meta meta_;
  std::vector<double> t_;
  std::vector<double> I_;
  std::vector<double> moments_;
};

// Knot step in effect at t for a given cap.
double knot_step(double t, double max_step);

CumulativeTable build_checkpoints(double t_max, double max_step = kDefaultMaxStep, double rel_tol = kDefaultRelTol,
                                  Execution execution = Execution::parallel);
// Continues a table to a larger t_max; the result equals a direct build.
CumulativeTable extend_checkpoints(const CumulativeTable& table, double t_max,
                                   Execution execution = Execution::parallel);

// I(T). Throws RangeError when T > t_max.
double hl_integral(double T, const CumulativeTable& table);

// int_a^b Z^2 by adaptive Gauss-Kronrod panels, independent of any table.
double interval_integral(double a, double b, double rel_tol = 1e-12, Execution execution = Execution::parallel);

// Cost functions for panels of a table build: Z^2 times optional weights.
double integrate_z2(double a, double b, double rel_tol);
double integrate_z2_exp(double a, double b, double y, double rel_tol);    // int Z^2 e^{-2t/y}
double integrate_z2_t_exp(double a, double b, double y, double rel_tol);  // int t Z^2 e^{-2t/y}

struct WeightedIntegralResult {
  double y = 0.0;
  double mu_of_y = 0.0;
  double value = 0.0;  // Phi(y)
  double truncation_point = 0.0;
  double truncation_err_bound = 0.0;
  double abs_tol = 0.0;
};

// abs_tol scaled to the size of Phi(y): kDefaultAbsTol * max(1, (y/2) ln y).
double weighted_abs_tol(double y);
// First t beyond 3y/4 where B e^{-2t/y} t^{3/2} (y/2) < abs_tol.
double tail_bound_point(double y, double B, double abs_tol);
double tail_bound(double t, double y, double B);
// Upper end of the integration for Phi(y): min(mu(y), first knot >= tail_bound_point).
double truncation_point(double y, const MuSpec& mu, const CumulativeTable& table);
// t_max a table needs so that Phi can be evaluated for all y <= y_max.
double required_t_max(double y_max, const MuSpec& mu, double B);

// Phi(y) = int_0^{mu(y)} Z^2 e^{-2t/y} dt, truncated as above.
WeightedIntegralResult weighted_integral(double y, const MuSpec& mu, const CumulativeTable& table);
// Phi'(y) = (2/y^2) int_0^{mu} t Z^2 e^{-2t/y} + Z^2(mu) e^{-2 mu/y} mu'(y); the
// boundary term is included only when the integral is cut at mu itself.
double weighted_integral_derivative(double y, const MuSpec& mu, const CumulativeTable& table);
// int_m^inf Z^2 e^{-2t/y} dt, integrated directly until the weight drops below 1e-6.
double tail_integral(double m, double y);

}  // namespace ladderlab
