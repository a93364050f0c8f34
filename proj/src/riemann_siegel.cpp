#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ladderlab/constants.hpp"
#include "zeta_detail.hpp"

namespace ladderlab::detail {

namespace {

constexpr int kPrebuiltTerms = 1 << 13;

struct Prebuilt {
  std::vector<double> log_n;
  std::vector<double> qlog_n;
  std::vector<double> rsqrt_n;
};

// ln(n) in quarter turns, rounded once from long double.
double quarter_turn_log(int n) {
  constexpr long double kTwoOverPiLd = 0.636619772367581343075535053490057448L;
  return static_cast<double>(std::log(static_cast<long double>(n)) * kTwoOverPiLd);
}

void fill(int n_max, std::vector<double>& lg, std::vector<double>& qlg, std::vector<double>& w) {
  lg.resize(n_max + 1);
  qlg.resize(n_max + 1);
  w.resize(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    lg[n] = std::log(static_cast<double>(n));
    qlg[n] = quarter_turn_log(n);
    w[n] = 1.0 / std::sqrt(static_cast<double>(n));
  }
}

const Prebuilt& prebuilt() {
  static const Prebuilt p = [] {
    Prebuilt t;
    fill(kPrebuiltTerms, t.log_n, t.qlog_n, t.rsqrt_n);
    return t;
  }();
  return p;
}

}  // namespace

DirichletTables::DirichletTables(int n_max) {
  const Prebuilt& p = prebuilt();
  if (n_max <= kPrebuiltTerms) {
    log_n = p.log_n;
    qlog_n = p.qlog_n;
    rsqrt_n = p.rsqrt_n;
    return;
  }
  fill(n_max, own_log_, own_qlog_, own_rsqrt_);
  log_n = own_log_;
  qlog_n = own_qlog_;
  rsqrt_n = own_rsqrt_;
}

double cos_sum(double phase0, double t, int N, const double* qlg, const double* w) {
  constexpr double kTwoOverPi = 0.63661977236758134307553505349005745;
  const double q0 = phase0 * kTwoOverPi;
  constexpr double kHalfPi = 1.57079632679489661923132169163975144;
  constexpr double kShifter = 6755399441055744.0;  // 1.5 * 2^52: rounds to nearest integer
  double acc = 0.0;
#pragma omp simd reduction(+ : acc)
  for (int n = 1; n <= N; ++n) {
    // Phase in quarter turns; v - k is exact, so only the table entry and
    // the fma round at the scale of t ln n.
    const double v = std::fma(-t, qlg[n], q0);
    const double k = (v + kShifter) - kShifter;
    const double r = (v - k) * kHalfPi;
    const double r2 = r * r;
    double c = -1.0 / 20922789888000.0;
    c = std::fma(c, r2, 1.0 / 87178291200.0);
    c = std::fma(c, r2, -1.0 / 479001600.0);
    c = std::fma(c, r2, 1.0 / 3628800.0);
    c = std::fma(c, r2, -1.0 / 40320.0);
    c = std::fma(c, r2, 1.0 / 720.0);
    c = std::fma(c, r2, -1.0 / 24.0);
    c = std::fma(c, r2, 0.5);
    c = std::fma(-c, r2, 1.0);
    double s = -1.0 / 355687428096000.0;
    s = std::fma(s, r2, 1.0 / 1307674368000.0);
    s = std::fma(s, r2, -1.0 / 6227020800.0);
    s = std::fma(s, r2, 1.0 / 39916800.0);
    s = std::fma(s, r2, -1.0 / 362880.0);
    s = std::fma(s, r2, 1.0 / 5040.0);
    s = std::fma(s, r2, -1.0 / 120.0);
    s = std::fma(s, r2, 1.0 / 6.0);
    s = std::fma(-s * r2, r, r);
    // cos(k pi/2 + r) by quadrant k mod 4.
    const std::int64_t quadrant = static_cast<std::int64_t>(k) & 3;
    const double base = (quadrant & 1) ? s : c;
    const double sign = (quadrant == 1 || quadrant == 2) ? -1.0 : 1.0;
    acc += w[n] * (sign * base);
  }
  return acc;
}

namespace {

constexpr int kTaylorTerms = 96;
constexpr int kCauchyPoints = 512;

// Taylor coefficients of Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// about p = 1/2, by the trapezoidal Cauchy integral on |z| = 1. Psi is entire.
std::vector<double> psi_taylor() {
  using cd = std::complex<double>;
  std::vector<double> a(kTaylorTerms, 0.0);
  std::vector<cd> values(kCauchyPoints);
  for (int m = 0; m < kCauchyPoints; ++m) {
    const cd zm = std::polar(1.0, kTwoPi * (m + 0.5) / kCauchyPoints);
    values[m] = std::cos(kTwoPi * (zm * zm - 5.0 / 16.0)) / (-std::cos(kTwoPi * zm));
  }
  for (int j = 0; j < kTaylorTerms; ++j) {
    cd sum = 0.0;
    for (int m = 0; m < kCauchyPoints; ++m) {
      sum += values[m] * std::polar(1.0, -kTwoPi * j * (m + 0.5) / kCauchyPoints);
    }
    a[j] = sum.real() / kCauchyPoints;
  }
  return a;
}

// Coefficients (in z) of d^m Psi / dz^m.
std::vector<double> derivative(const std::vector<double>& a, int m) {
  std::vector<double> d(a.size(), 0.0);
  for (std::size_t j = m; j < a.size(); ++j) {
    double f = 1.0;
    for (int i = 0; i < m; ++i) f *= static_cast<double>(j - i);
    d[j - m] = a[j] * f;
  }
  return d;
}

struct Term {
  int order;
  double scale;
};

std::array<std::vector<double>, 5> build_polys() {
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double pi8 = pi4 * pi4;
  const std::array<std::vector<Term>, 5> recipe{{
      {{0, 1.0}},
      {{3, -1.0 / (96.0 * pi2)}},
      {{2, 1.0 / (64.0 * pi2)}, {6, 1.0 / (18432.0 * pi4)}},
      {{1, -1.0 / (64.0 * pi2)}, {5, -1.0 / (3840.0 * pi4)}, {9, -1.0 / (5308416.0 * pi6)}},
      {{0, 1.0 / (128.0 * pi2)},
       {4, 19.0 / (24576.0 * pi4)},
       {8, 11.0 / (5898240.0 * pi6)},
       {12, 1.0 / (2038431744.0 * pi8)}},
  }};
  const std::vector<double> psi = psi_taylor();
  std::array<std::vector<double>, 5> polys;
  for (int k = 0; k < 5; ++k) {
    std::vector<double> p(psi.size(), 0.0);
    for (const Term& term : recipe[k]) {
      const std::vector<double> d = derivative(psi, term.order);
      for (std::size_t j = 0; j < d.size(); ++j) p[j] += term.scale * d[j];
    }
    // Drop the tail once it cannot reach 1e-18 on |z| <= 1/2.
    double tail = 0.0;
    std::size_t keep = p.size();
    while (keep > 1) {
      const double next = tail + std::abs(p[keep - 1]) * std::pow(0.5, static_cast<double>(keep - 1));
      if (next > 1e-18) break;
      tail = next;
      --keep;
    }
    p.resize(keep);
    polys[k] = std::move(p);
  }
  return polys;
}

const std::array<std::vector<double>, 5>& polys() {
  static const std::array<std::vector<double>, 5> p = build_polys();
  return p;
}

double horner(const std::vector<double>& c, double z) {
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) acc = std::fma(acc, z, c[j]);
  return acc;
}

}  // namespace

double riemann_siegel_correction(double p, double inv_tau) {
  const auto& c = polys();
  const double z = p - 0.5;
  double acc = 0.0;
  for (int k = 4; k >= 0; --k) acc = std::fma(acc, inv_tau, horner(c[k], z));
  return acc;
}

std::span<const double> riemann_siegel_poly(int k) { return polys().at(k); }

}  // namespace ladderlab::detail
