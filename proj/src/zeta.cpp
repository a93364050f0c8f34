#include "ladderlab/zeta.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "parallel.hpp"
#include "ladderlab/roots.hpp"
#include "zeta_detail.hpp"

namespace ladderlab {

namespace {

using cd = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite_nonnegative(double t, const char* what) {
  if (!std::isfinite(t)) throw DomainError(std::string(what) + ": argument is not finite");
  if (t < 0.0) throw DomainError(std::string(what) + ": argument must be >= 0");
}

double bernoulli_abs(int k) { return std::abs(boost::math::bernoulli_b2n<double>(k)); }

// sqrt(sum_{n<=N} 1/n): random-walk scale of N rounded phases.
double harmonic_rms(int N) { return std::sqrt(std::log(static_cast<double>(std::max(N, 1))) + 0.5773 + 0.5 / std::max(N, 1)); }

// Rounding model for sum_{n<=N} n^{-1/2} cos(phase0 - t ln n): each phase
// carries two independent roundings of size <= eps/2 * t ln n (table entry
// and fma), rms eps/2 * t ln n * sqrt(2/3). Summed as a random walk with a
// 3-sigma margin, plus the kernel's polynomial error.
double dirichlet_roundoff(double t, int N, double lnN) {
  return 1.25 * kEps * t * lnN * harmonic_rms(N) + 8.0 * kEps * harmonic_rms(N);
}

}  // namespace

ThetaValue theta_log_gamma(double t) {
  require_finite_nonnegative(t, "theta");
  // Im ln Gamma(1/4 + i t/2): shift the argument right until Stirling's series
  // is accurate, then undo the shift with the continuous branch of arg.
  cd w(0.25, 0.5 * t);
  double shift_arg = 0.0;
  while (std::abs(w) < 15.0) {
    shift_arg += std::arg(w);
    w += 1.0;
  }
  const cd lw = std::log(w);
  cd series = (w - 0.5) * lw - w + 0.5 * std::log(kTwoPi);
  const cd w2inv = 1.0 / (w * w);
  cd wpow = 1.0 / w;
  double next = 0.0;
  for (int k = 1; k <= 12; ++k) {
    const cd term = boost::math::bernoulli_b2n<double>(k) / (2.0 * k * (2.0 * k - 1.0)) * wpow;
    series += term;
    wpow *= w2inv;
    next = bernoulli_abs(k + 1) / (2.0 * (k + 1) * (2.0 * k + 1.0)) * std::abs(wpow);
  }
  ThetaValue out;
  out.t = t;
  out.value = series.imag() - shift_arg - 0.5 * t * std::log(kPi);
  out.abs_err_bound = next + 8.0 * kEps * (std::abs((w - 0.5) * lw) + std::abs(w) + shift_arg + t);
  if (t == 0.0) {
    out.value = 0.0;  // Gamma(1/4) is real and positive.
  }
  return out;
}

namespace {

struct ThetaLd {
  long double value;
  double tail;  // first omitted term of the series
};

// Stirling-type series for theta, summed in long double so that the phase
// stays accurate to well below one double ulp for t up to 1e7.
ThetaLd theta_series_ld(double t) {
  const long double tl = t;
  const long double lead =
      0.5L * tl * (std::log(tl / static_cast<long double>(kTwoPi)) - 1.0L) - static_cast<long double>(kPi) / 8.0L;
  const long double inv_t2 = 1.0L / (tl * tl);
  long double tpow = 1.0L / tl;
  long double corr = 0.0L;
  double next = 0.0;
  for (int k = 1; k <= 12; ++k) {
    const double coeff = (1.0 - std::ldexp(1.0, 1 - 2 * k)) * bernoulli_abs(k) / (4.0 * k * (2.0 * k - 1.0));
    const long double term = coeff * tpow;
    const double coeff_next =
        (1.0 - std::ldexp(1.0, -1 - 2 * k)) * bernoulli_abs(k + 1) / (4.0 * (k + 1) * (2.0 * k + 1.0));
    next = static_cast<double>(coeff_next * tpow * inv_t2);
    corr += term;
    if (next > static_cast<double>(term) || next < 1e-22) break;
    tpow *= inv_t2;
  }
  // Exponentially small part the series misses (1e-14 at t = 10).
  const long double reflection = 0.5L * std::atan(std::exp(-static_cast<long double>(kPi) * tl));
  return {lead + corr + reflection, next};
}

constexpr double kEpsLd = std::numeric_limits<long double>::epsilon();

}  // namespace

ThetaValue theta_asymptotic(double t) {
  require_finite_nonnegative(t, "theta");
  if (t < 1.0) throw DomainError("theta_asymptotic: needs t >= 1");
  const ThetaLd th = theta_series_ld(t);
  ThetaValue out;
  out.t = t;
  out.value = static_cast<double>(th.value);
  // Series tail, long double roundoff, and the final rounding to double.
  out.abs_err_bound = 2.0 * th.tail + 8.0 * kEpsLd * std::abs(static_cast<double>(th.value)) +
                      0.5 * kEps * std::abs(out.value) + 1e-300;
  return out;
}

ThetaValue theta(double t) {
  require_finite_nonnegative(t, "theta");
  return t < kThetaAsymptoticFrom ? theta_log_gamma(t) : theta_asymptotic(t);
}

double mean_zero_spacing(double t) { return kTwoPi / std::max(1.0, std::log(std::max(t, 1.0) / kTwoPi)); }

double zero_count_estimate(double T) { return theta(T).value / kPi + 1.0; }

namespace {

// Borwein's accelerated alternating series for eta(s), s = 1/2 + i t.
ZValue z_alternating(double t, const ThetaValue& th) {
  const cd s(0.5, t);
  const cd denom = 1.0 - std::pow(cd(2.0, 0.0), 1.0 - s);
  const double inv_gamma = std::sqrt(std::cosh(kPi * t) / kPi);
  const double target = 1e-17;
  const double lnrate = std::log(3.0 + std::sqrt(8.0));
  const int n = std::max(
      8, static_cast<int>(std::ceil((std::log(2.0 * inv_gamma / (std::abs(denom) * target))) / lnrate)) + 1);

  // e_i = (n+i-1)! 4^i / ((n-i)! (2i)!); weights are suffix sums / total.
  std::vector<double> e(n + 1);
  e[0] = 1.0 / n;
  for (int i = 1; i <= n; ++i) {
    e[i] = e[i - 1] * 4.0 * (n + i - 1.0) * (n - i + 1.0) / (2.0 * i * (2.0 * i - 1.0));
  }
  std::vector<double> suffix(n + 2, 0.0);
  for (int i = n; i >= 0; --i) suffix[i] = suffix[i + 1] + e[i];
  const double total = suffix[0];

  detail::DirichletTables tab(n);
  cd sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double weight = suffix[k + 1] / total;  // (d_n - d_k) / d_n
    const double ln = tab.log_n[k + 1];
    const cd power = tab.rsqrt_n[k + 1] * cd(std::cos(t * ln), -std::sin(t * ln));
    sum += (k % 2 == 0 ? weight : -weight) * power;
  }
  const cd zeta = sum / denom;
  const cd rotated = std::polar(1.0, th.value) * zeta;
  ZValue out;
  out.t = t;
  out.value = rotated.real();
  const double trunc = 2.0 * inv_gamma / (std::exp(n * lnrate) * std::abs(denom));
  out.abs_err_bound = trunc + th.abs_err_bound * std::abs(zeta) + std::abs(rotated.imag()) +
                      16.0 * kEps * n / std::abs(denom);
  return out;
}

// Euler-Maclaurin with N ~ t/pi terms, so each Bernoulli correction gains ~1/4.
struct Phase {
  double reduced;  // theta(t) mod 2 pi
  double err;      // error bound on theta before reduction
};

ZValue z_euler_maclaurin(double t, const Phase& th) {
  const cd s(0.5, t);
  const int N = std::max(8, static_cast<int>(std::ceil(t / kPi)) + 8);
  detail::DirichletTables tab(N);
  const double head = detail::cos_sum(th.reduced, t, N - 1, tab.qlog_n.data(), tab.rsqrt_n.data());

  const double lnN = tab.log_n[N];
  const cd rotN = tab.rsqrt_n[N] * std::polar(1.0, std::fma(-t, lnN, th.reduced));  // e^{i theta} N^{-s}
  cd tail = static_cast<double>(N) / (s - 1.0) + 0.5;
  const double invN2 = 1.0 / (static_cast<double>(N) * N);
  cd P = s / (2.0 * N);
  double next_bound = 0.0;
  for (int k = 1; k <= 80; ++k) {
    const cd term = boost::math::bernoulli_b2n<double>(k) * P;
    tail += term;
    P *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / ((2.0 * k + 1.0) * (2.0 * k + 2.0)) * invN2;
    const double next = std::abs(boost::math::bernoulli_b2n<double>(k + 1) * P);
    next_bound = next * std::abs(s + (2.0 * k + 1.0)) / (0.5 + 2.0 * k + 1.0);
    if (next_bound < 1e-18) break;
  }
  ZValue out;
  out.t = t;
  out.value = head + (rotN * tail).real();
  // A common phase error moves Z by at most sum n^{-1/2} < 2 sqrt(N).
  out.abs_err_bound = next_bound * tab.rsqrt_n[N] + th.err * 2.0 * std::sqrt(static_cast<double>(N)) +
                      dirichlet_roundoff(t, N, lnN);
  return out;
}

// Gabcke's constant for the remainder after C_4: |R_4| < 0.017 t^{-11/4}, t >= 200.
constexpr double kGabckeD4 = 0.017;

ZValue z_riemann_siegel(double t, const Phase& th) {
  if (t < kTwoPi) throw DomainError("Riemann-Siegel evaluation needs t >= 2 pi");
  const double tau = std::sqrt(t / kTwoPi);
  const int N = static_cast<int>(std::floor(tau));
  const double p = tau - N;
  detail::DirichletTables tab(N);
  const double main = 2.0 * detail::cos_sum(th.reduced, t, N, tab.qlog_n.data(), tab.rsqrt_n.data());
  const double corr = detail::riemann_siegel_correction(p, 1.0 / tau) / std::sqrt(tau);
  ZValue out;
  out.t = t;
  out.value = main + ((N - 1) % 2 == 0 ? corr : -corr);
  const double trunc = kGabckeD4 * std::pow(t, -2.75) * (t < 200.0 ? 10.0 : 1.0);
  out.abs_err_bound = trunc + th.err * 4.0 * std::sqrt(static_cast<double>(N)) +
                      2.0 * dirichlet_roundoff(t, N, tab.log_n[N]);
  return out;
}

}  // namespace

namespace {

Phase reduced_phase(double t) {
  if (t < kThetaAsymptoticFrom) {
    const ThetaValue th = theta_log_gamma(t);
    return {th.value, th.abs_err_bound};
  }
  const ThetaLd th = theta_series_ld(t);
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  const long double r = std::fmod(th.value, two_pi);
  return {static_cast<double>(r), 2.0 * th.tail + 8.0 * kEpsLd * std::abs(static_cast<double>(th.value)) +
                                      kEps * std::abs(static_cast<double>(r))};
}

}  // namespace

ZValue z(double t, ZMethod method) {
  require_finite_nonnegative(t, "z");
  if (method == ZMethod::automatic) {
    method = t < kAlternatingBelow   ? ZMethod::alternating_series
             : t < kRiemannSiegelFrom ? ZMethod::euler_maclaurin
                                      : ZMethod::riemann_siegel;
  }
  switch (method) {
    case ZMethod::alternating_series:
      return z_alternating(t, theta(t));
    case ZMethod::euler_maclaurin:
      return z_euler_maclaurin(t, reduced_phase(t));
    default:
      return z_riemann_siegel(t, reduced_phase(t));
  }
}

ZValue z(double t) { return z(t, ZMethod::automatic); }

double z_squared(double t) {
  const double v = z(t).value;
  return v * v;
}

namespace {

struct Sample {
  double t;
  double z;
};

struct SegmentResult {
  std::vector<ZeroRecord> zeros;
};

ZeroRecord refine_sign_change(double a, double b, double za, double zb, double tol) {
  auto f = [](double x) { return z(x).value; };
  const RootResult r = brent_root(f, a, b, za, zb, 0.5 * tol);
  ZeroRecord rec;
  rec.gamma = r.root;
  rec.bracket_width = std::max(r.hi - r.lo, std::numeric_limits<double>::min());
  rec.z_residual = std::abs(r.f_root);
  return rec;
}

// Golden-section search for the extremum of sign * Z on [a, b].
Sample extremum_toward_zero(double a, double b, double sign) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [sign](double x) { return sign * z(x).value; };
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 60 && (b - a) > 1e-10; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
    if (f1 <= 0.0 || f2 <= 0.0) break;
  }
  return f1 < f2 ? Sample{x1, sign * f1} : Sample{x2, sign * f2};
}

SegmentResult scan_segment(double a, double b, const ZeroScanOptions& opt, bool refine) {
  SegmentResult out;
  const double step = opt.step_fraction * mean_zero_spacing(b);
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
  std::vector<Sample> s(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = (i == n) ? b : a + (b - a) * i / n;
    s[i] = {x, z(x).value};
  }
  auto positive = [](double v) { return v >= 0.0; };
  for (int i = 0; i < n; ++i) {
    if (positive(s[i].z) != positive(s[i + 1].z)) {
      out.zeros.push_back(refine ? refine_sign_change(s[i].t, s[i + 1].t, s[i].z, s[i + 1].z, opt.bracket_tol)
                                 : ZeroRecord{0, 0.5 * (s[i].t + s[i + 1].t), s[i + 1].t - s[i].t, 0.0, false});
      continue;
    }
    // A dip of |Z| toward zero between samples of equal sign: either a missed
    // close pair of zeros or a (suspected) tangential zero.
    if (i == 0 || positive(s[i - 1].z) != positive(s[i].z)) continue;
    const double m = std::abs(s[i].z);
    if (!(m < std::abs(s[i - 1].z) && m <= std::abs(s[i + 1].z)) || m > 0.05) continue;
    const double sign = positive(s[i].z) ? 1.0 : -1.0;
    const Sample ext = extremum_toward_zero(s[i - 1].t, s[i + 1].t, sign);
    if (positive(ext.z) != positive(s[i].z)) {
      // Two zeros hidden inside [t_{i-1}, t_{i+1}]; drop any record already
      // produced for the left half and emit both in order.
      if (refine) {
        out.zeros.push_back(refine_sign_change(s[i - 1].t, ext.t, s[i - 1].z, ext.z, opt.bracket_tol));
        out.zeros.push_back(refine_sign_change(ext.t, s[i + 1].t, ext.z, s[i + 1].z, opt.bracket_tol));
      } else {
        out.zeros.push_back({0, ext.t, ext.t - s[i - 1].t, 0.0, false});
        out.zeros.push_back({0, ext.t, s[i + 1].t - ext.t, 0.0, false});
      }
    } else if (std::abs(ext.z) < opt.z_tol) {
      out.zeros.push_back({0, ext.t, s[i + 1].t - s[i - 1].t, std::abs(ext.z), true});
    }
  }
  return out;
}

std::vector<ZeroRecord> scan(double t_lo, double t_hi, const ZeroScanOptions& opt, bool refine) {
  // Unit segments on an absolute grid so the sample set does not depend on
  // the thread count.
  std::vector<std::pair<double, double>> segments;
  double a = t_lo;
  while (a < t_hi) {
    const double b = std::min(t_hi, std::floor(a) + 1.0);
    segments.emplace_back(a, b);
    a = b;
  }
  std::vector<SegmentResult> results(segments.size());
  const long count = static_cast<long>(segments.size());
  detail::for_each_index(count, opt.execution,
                         [&](long i) { results[i] = scan_segment(segments[i].first, segments[i].second, opt, refine); });
  std::vector<ZeroRecord> zeros;
  for (const auto& r : results) zeros.insert(zeros.end(), r.zeros.begin(), r.zeros.end());
  std::stable_sort(zeros.begin(), zeros.end(),
                   [](const ZeroRecord& x, const ZeroRecord& y) { return x.gamma < y.gamma; });
  return zeros;
}

}  // namespace

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, const ZeroScanOptions& options) {
  if (!std::isfinite(t_lo) || !std::isfinite(t_hi)) throw DomainError("find_zeros: bounds must be finite");
  if (t_lo < 0.0) throw DomainError("find_zeros: t_lo must be >= 0");
  if (t_hi <= t_lo) throw DomainError("find_zeros: need t_lo < t_hi");
  std::vector<ZeroRecord> zeros = scan(t_lo, t_hi, options, true);
  // Ordinals: count the sign changes below t_lo.
  int offset = 0;
  if (t_lo > 0.0) {
    ZeroScanOptions quick = options;
    offset = static_cast<int>(scan(0.0, t_lo, quick, false).size());
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].index = offset + static_cast<int>(i) + 1;
  return zeros;
}

}  // namespace ladderlab
