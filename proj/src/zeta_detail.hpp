#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ladderlab::detail {

// ln(n), ln(n) * 2/pi and n^{-1/2} for 1 <= n <= n_max, index 0 unused. Shares a prebuilt
// table up to n = 8192 (t ~ 4e8) and owns a private copy beyond that.
class DirichletTables {
 public:
  explicit DirichletTables(int n_max);
  DirichletTables(const DirichletTables&) = delete;
  DirichletTables& operator=(const DirichletTables&) = delete;
  std::span<const double> log_n;
  std::span<const double> qlog_n;
  std::span<const double> rsqrt_n;

 private:
  std::vector<double> own_log_;
  std::vector<double> own_qlog_;
  std::vector<double> own_rsqrt_;
};

// sum_{n=1}^{N} w[n] * cos(phase0 - t * ln n), with qlg[n] = ln(n) * 2/pi.
// Vectorised; phase0 should already be reduced mod 2 pi.
double cos_sum(double phase0, double t, int N, const double* qlg, const double* w);

// Riemann-Siegel remainder series sum_{k<=4} C_k(p) tau^{-k}.
double riemann_siegel_correction(double p, double inv_tau);

// Coefficient polynomials of C_k(p) in z = p - 1/2 (exposed for tests).
std::span<const double> riemann_siegel_poly(int k);

}  // namespace ladderlab::detail
