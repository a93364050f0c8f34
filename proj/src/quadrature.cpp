#include "ladderlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "ladderlab/errors.hpp"
#include "parallel.hpp"
#include "ladderlab/zeta.hpp"

namespace ladderlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPanelRelTol = 1e-12;  // partial-interval integrals
constexpr int kMaxDepth = 12;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Rule {
  std::array<double, 15> x{};   // nodes on [-1, 1]
  std::array<double, 15> wk{};  // Kronrod weights
  std::array<double, 15> wg{};  // Gauss weights, zero off the 7-point nodes
};

const Rule& rule() {
  static const Rule r = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& kx = gauss_kronrod<double, 15>::abscissa();
    const auto& kw = gauss_kronrod<double, 15>::weights();
    const auto& gw = gauss<double, 7>::weights();
    Rule out;
    out.x[7] = 0.0;
    out.wk[7] = kw[0];
    out.wg[7] = gw[0];
    for (int i = 1; i <= 7; ++i) {
      out.x[7 - i] = -kx[i];
      out.x[7 + i] = kx[i];
      out.wk[7 - i] = out.wk[7 + i] = kw[i];
      // Gauss nodes sit at the even Kronrod positions.
      const double g = (i % 2 == 0) ? gw[i / 2] : 0.0;
      out.wg[7 - i] = out.wg[7 + i] = g;
    }
    return out;
  }();
  return r;
}

struct PanelNodes {
  std::array<double, 15> t;
  std::array<double, 15> f;
  std::array<double, 15> wf;  // Kronrod weight * half width * f
};

struct UnitWeight {
  double operator()(double) const { return 1.0; }
};

// Adaptive G7K15 for Z^2 times a nonnegative weight, with the QUADPACK error
// estimate; `sink` sees every accepted panel. Near a zero of Z the panel
// integral is tiny, so the tolerance is floored at rel_tol times the mean
// density of the top-level panel. It is also floored at the propagated
// evaluation error of Z^2, below which refinement cannot gain anything.
template <class W, class Sink>
long double adaptive(const W& weight, double a, double b, double rel_tol, Sink& sink, int depth = 0,
                     double density = -1.0) {
  const Rule& R = rule();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  PanelNodes p;
  std::array<double, 15> fv;
  double K = 0.0, G = 0.0, resabs = 0.0, noise = 0.0;
  for (int i = 0; i < 15; ++i) {
    p.t[i] = c + h * R.x[i];
    const ZValue zv = z(p.t[i]);
    const double w = weight(p.t[i]);
    fv[i] = zv.value * zv.value * w;
    K += R.wk[i] * fv[i];
    G += R.wg[i] * fv[i];
    resabs += R.wk[i] * std::abs(fv[i]);
    noise += R.wk[i] * (2.0 * std::abs(zv.value) + zv.abs_err_bound) * zv.abs_err_bound * w;
  }
  const double mean = 0.5 * K;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i) resasc += R.wk[i] * std::abs(fv[i] - mean);
  K *= h;
  G *= h;
  resabs *= h;
  resasc *= h;
  noise *= h;
  double err = std::abs(K - G);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (density < 0.0) density = resabs / (2.0 * h);
  const double roundoff = 50.0 * kEps * resabs;
  const double tol = std::max({rel_tol * std::max(std::abs(K), 2.0 * h * density), roundoff, noise});
  if (err <= tol || depth >= kMaxDepth || h < 64.0 * kEps * std::abs(c)) {
    p.f = fv;
    for (int i = 0; i < 15; ++i) p.wf[i] = R.wk[i] * h * fv[i];
    sink(p);
    return K;
  }
  return adaptive(weight, a, c, rel_tol, sink, depth + 1, density) +
         adaptive(weight, c, b, rel_tol, sink, depth + 1, density);
}

struct NoSink {
  void operator()(const PanelNodes&) const {}
};

// Panels no wider than half the mean zero spacing at their right end.
int panel_count(double a, double b) {
  const double cap = 0.5 * mean_zero_spacing(b);
  return std::max(1, static_cast<int>(std::ceil((b - a) / cap)));
}

template <class W, class Sink>
long double integrate_panels(const W& weight, double a, double b, double rel_tol, Sink& sink) {
  const int n = panel_count(a, b);
  long double sum = 0.0L;
  for (int i = 0; i < n; ++i) {
    const double lo = (i == 0) ? a : a + (b - a) * i / n;
    const double hi = (i == n - 1) ? b : a + (b - a) * (i + 1) / n;
    sum += adaptive(weight, lo, hi, rel_tol, sink);
  }
  return sum;
}

template <class W>
long double integrate_panels(const W& weight, double a, double b, double rel_tol) {
  NoSink sink;
  return integrate_panels(weight, a, b, rel_tol, sink);
}

// Long ranges are cut into fixed chunks so the parallel and serial sums
// agree bitwise.
template <class W>
long double integrate_chunked(const W& weight, double a, double b, double rel_tol, Execution execution) {
  constexpr double kChunk = 64.0;
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / kChunk)));
  std::vector<long double> parts(n);
  auto run = [&](long i) {
    const double lo = (i == 0) ? a : a + (b - a) * static_cast<double>(i) / n;
    const double hi = (i == n - 1) ? b : a + (b - a) * static_cast<double>(i + 1) / n;
    parts[i] = integrate_panels(weight, lo, hi, rel_tol);
  };
  detail::for_each_index(n, execution, run);
  long double sum = 0.0L;
  for (long double p : parts) sum += p;
  return sum;
}

double z2(double t) {
  const double v = z(t).value;
  return v * v;
}

// int_a^b Z^2 e^{-2(t - origin)/y}
long double weighted_from(double a, double b, double y, double origin, double rel_tol) {
  const double k = 2.0 / y;
  return integrate_panels([=](double t) { return std::exp(-k * (t - origin)); }, a, b, rel_tol);
}

long double t_weighted_from(double a, double b, double y, double origin, double rel_tol) {
  const double k = 2.0 / y;
  return integrate_panels([=](double t) { return t * std::exp(-k * (t - origin)); }, a, b, rel_tol);
}

std::vector<double> knot_grid(double t_max, double max_step) {
  const double fine = std::min(max_step, 1.0);
  const double coarse = std::min(max_step, 5.0);
  std::vector<double> t{0.0};
  for (long k = 1;; ++k) {
    const double v = fine * static_cast<double>(k);
    if (v >= kFineStepBelow || v >= t_max) break;
    t.push_back(v);
  }
  if (t_max > kFineStepBelow) {
    t.push_back(kFineStepBelow);
    for (long j = 1;; ++j) {
      const double v = kFineStepBelow + coarse * static_cast<double>(j);
      if (v >= t_max) break;
      t.push_back(v);
    }
  }
  if (t.back() != t_max) t.push_back(t_max);
  return t;
}

bool on_grid(double t, double max_step) {
  const double fine = std::min(max_step, 1.0);
  const double coarse = std::min(max_step, 5.0);
  if (t <= kFineStepBelow) {
    const double k = std::round(t / fine);
    return fine * k == t || t == kFineStepBelow;
  }
  const double j = std::round((t - kFineStepBelow) / coarse);
  return kFineStepBelow + coarse * j == t;
}

struct IntervalResult {
  long double integral = 0.0L;
  std::array<double, kMomentCount> moments{};
  double A_observed = 0.0;
};

IntervalResult integrate_interval(double a, double b, double rel_tol) {
  IntervalResult r;
  std::array<long double, kMomentCount> m{};
  const double h = b - a;
  double amax = 0.0;
  auto sink = [&](const PanelNodes& p) {
    for (int i = 0; i < 15; ++i) {
      const double s = (p.t[i] - a) / h;
      long double sp = p.wf[i];
      for (int j = 0; j < kMomentCount; ++j) {
        m[j] += sp;
        sp *= s;
      }
      const double t = p.t[i];
      if (t >= kCalibrationLo && t <= kCalibrationHi) {
        amax = std::max(amax, std::sqrt(p.f[i]) / std::sqrt(std::sqrt(t)));
      }
    }
  };
  r.integral = integrate_panels(UnitWeight{}, a, b, rel_tol, sink);
  for (int j = 0; j < kMomentCount; ++j) r.moments[j] = static_cast<double>(m[j]);
  r.A_observed = amax;
  return r;
}

CumulativeTable assemble(const CumulativeTable* base, double t_max, double max_step, double rel_tol,
                         Execution execution) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("checkpoints: t_max must be positive and finite");
  if (!(max_step > 0.0) || !std::isfinite(max_step)) throw DomainError("checkpoints: max_step must be positive");
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) throw DomainError("checkpoints: rel_tol must lie in (0, 1)");
  const std::vector<double> grid = knot_grid(t_max, max_step);
  const std::size_t n_int = grid.size() - 1;

  // Reuse complete intervals of the base table that coincide with this grid.
  std::size_t reuse = 0;
  if (base != nullptr && !base->empty() && base->has_moments()) {
    const auto bt = base->t();
    while (reuse + 1 < bt.size() && reuse + 1 < grid.size() && bt[reuse + 1] == grid[reuse + 1] &&
           on_grid(bt[reuse + 1], max_step))
      ++reuse;
  }

  std::vector<IntervalResult> fresh(n_int - reuse);
  const long count = static_cast<long>(fresh.size());
  auto run = [&](long i) { fresh[i] = integrate_interval(grid[reuse + i], grid[reuse + i + 1], rel_tol); };
  detail::for_each_index(count, execution, run);

  std::vector<double> I(grid.size(), 0.0);
  std::vector<double> moments(n_int * kMomentCount);
  CumulativeTable::Meta meta;
  meta.t_max = t_max;
  meta.max_step = max_step;
  meta.rel_tol = rel_tol;
  double amax = 0.0;
  for (std::size_t k = 0; k < reuse; ++k) {
    I[k + 1] = base->I()[k + 1];
    const auto m = base->moments(k);
    std::copy(m.begin(), m.end(), moments.begin() + k * kMomentCount);
  }
  if (reuse > 0) amax = base->meta().A_observed;
  for (std::size_t k = reuse; k < n_int; ++k) {
    const IntervalResult& r = fresh[k - reuse];
    // Each knot value is rounded before the next increment so that extended
    // and directly built tables agree bitwise.
    I[k + 1] = static_cast<double>(static_cast<long double>(I[k]) + r.integral);
    std::copy(r.moments.begin(), r.moments.end(), moments.begin() + k * kMomentCount);
    // A partial last interval would not exist in a longer build; leave it
    // out of the calibration unless it is all there is.
    const bool partial_last = (k + 1 == n_int) && !on_grid(grid[k + 1], max_step);
    if (!partial_last || n_int == 1) amax = std::max(amax, r.A_observed);
  }
  meta.A_observed = amax;
  meta.calibration_hi = std::min(t_max, kCalibrationHi);
  return CumulativeTable(meta, grid, std::move(I), std::move(moments));
}

// Horner for sum_j m_j x^j / j!, j < terms.
double moment_series(std::span<const double> m, double x, int terms) {
  double acc = m[terms - 1];
  for (int j = terms - 2; j >= 0; --j) acc = m[j] + acc * x / (j + 1);
  return acc;
}

void require_moments(const CumulativeTable& table) {
  if (!table.has_moments()) throw StateError("checkpoint table carries no moments; rebuild or load the sidecar");
}

}  // namespace

CumulativeTable::CumulativeTable(Meta meta, std::vector<double> t, std::vector<double> I, std::vector<double> moments)
    : meta_(std::move(meta)), t_(std::move(t)), I_(std::move(I)), moments_(std::move(moments)) {
  if (t_.size() < 2 || t_.size() != I_.size()) throw PreconditionError("checkpoint table: need matching t and I columns");
  if (t_[0] != 0.0 || I_[0] != 0.0) throw PreconditionError("checkpoint table: first knot must be (0, 0)");
  for (std::size_t k = 1; k < t_.size(); ++k) {
    if (!(t_[k] > t_[k - 1])) throw PreconditionError("checkpoint table: t not strictly increasing at row " + std::to_string(k));
    if (!(I_[k] >= I_[k - 1])) throw PreconditionError("checkpoint table: I decreasing at row " + std::to_string(k));
    if (t_[k] - t_[k - 1] > knot_step(t_[k - 1], meta_.max_step) * (1.0 + 1e-12))
      throw PreconditionError("checkpoint table: knot spacing exceeds max_step at row " + std::to_string(k));
  }
  if (t_.back() != meta_.t_max) throw PreconditionError("checkpoint table: last knot differs from t_max");
  if (!moments_.empty() && moments_.size() != intervals() * kMomentCount)
    throw PreconditionError("checkpoint table: moment count does not match the knots");
}

double CumulativeTable::B() const {
  const double a = A();
  return a * a / std::sqrt(2.0 * std::exp(1.0));
}

std::span<const double> CumulativeTable::moments(std::size_t k) const {
  return std::span<const double>(moments_).subspan(k * kMomentCount, kMomentCount);
}

std::size_t CumulativeTable::interval_of(double t) const {
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - t_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, intervals() - 1);
}

double CumulativeTable::knot_at_or_above(double t) const {
  const auto it = std::lower_bound(t_.begin(), t_.end(), t);
  return it == t_.end() ? t_.back() : *it;
}

double knot_step(double t, double max_step) {
  return t < kFineStepBelow ? std::min(max_step, 1.0) : std::min(max_step, 5.0);
}

CumulativeTable build_checkpoints(double t_max, double max_step, double rel_tol, Execution execution) {
  return assemble(nullptr, t_max, max_step, rel_tol, execution);
}

CumulativeTable extend_checkpoints(const CumulativeTable& table, double t_max, Execution execution) {
  if (t_max <= table.t_max()) return table;
  return assemble(&table, t_max, table.meta().max_step, table.meta().rel_tol, execution);
}

double hl_integral(double T, const CumulativeTable& table) {
  if (!std::isfinite(T) || T < 0.0) throw DomainError("hl_integral: T must be finite and >= 0");
  if (T > table.t_max())
    throw RangeError("hl_integral: T = " + fmt(T) + " exceeds the checkpoint range " + fmt(table.t_max()) +
                         "; extend the checkpoints",
                     T);
  const std::size_t k = table.interval_of(T);
  const double tk = table.t()[k];
  if (T == tk) return table.I()[k];
  if (T == table.t()[k + 1]) return table.I()[k + 1];
  return static_cast<double>(static_cast<long double>(table.I()[k]) + integrate_panels(UnitWeight{}, tk, T, kPanelRelTol));
}

double integrate_z2(double a, double b, double rel_tol) {
  if (!(a < b)) throw DomainError("integrate: need a < b");
  return static_cast<double>(integrate_chunked(UnitWeight{}, a, b, rel_tol, Execution::serial));
}

double interval_integral(double a, double b, double rel_tol, Execution execution) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("interval_integral: bounds must be finite");
  if (a < 0.0) throw DomainError("interval_integral: a must be >= 0");
  if (!(a < b)) throw DomainError("interval_integral: need a < b");
  return static_cast<double>(integrate_chunked(UnitWeight{}, a, b, rel_tol, execution));
}

double integrate_z2_exp(double a, double b, double y, double rel_tol) {
  if (!(a < b)) throw DomainError("integrate: need a < b");
  return static_cast<double>(weighted_from(a, b, y, 0.0, rel_tol));
}

double integrate_z2_t_exp(double a, double b, double y, double rel_tol) {
  if (!(a < b)) throw DomainError("integrate: need a < b");
  return static_cast<double>(t_weighted_from(a, b, y, 0.0, rel_tol));
}

double weighted_abs_tol(double y) { return kDefaultAbsTol * std::max(1.0, 0.5 * y * std::log(y)); }

double tail_bound(double t, double y, double B) { return B * std::exp(-2.0 * t / y) * std::pow(t, 1.5) * (0.5 * y); }

double tail_bound_point(double y, double B, double abs_tol) {
  // log of the bound is concave and decreasing beyond t = 3y/4.
  auto g = [&](double t) { return std::log(B) - 2.0 * t / y + 1.5 * std::log(t) + std::log(0.5 * y) - std::log(abs_tol); };
  double lo = 0.75 * y;
  if (g(lo) < 0.0) return lo;
  double hi = 2.0 * lo;
  while (g(hi) >= 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) >= 0.0 ? lo : hi) = mid;
  }
  return hi;
}

double truncation_point(double y, const MuSpec& mu, const CumulativeTable& table) {
  const double mu_y = mu(y);
  const double t_star = tail_bound_point(y, table.B(), weighted_abs_tol(y));
  if (t_star >= mu_y) return mu_y;
  if (t_star > table.t_max()) return t_star;  // caller reports the range error
  return std::min(mu_y, table.knot_at_or_above(t_star));
}

double required_t_max(double y_max, const MuSpec& mu, double B) {
  const double t_star = tail_bound_point(y_max, B, weighted_abs_tol(y_max));
  return std::min(mu(y_max), t_star) + 2.0 * kDefaultMaxStep;
}

WeightedIntegralResult weighted_integral(double y, const MuSpec& mu, const CumulativeTable& table) {
  if (!std::isfinite(y)) throw DomainError("weighted_integral: y must be finite");
  mu.require_valid(y);
  require_moments(table);
  WeightedIntegralResult out;
  out.y = y;
  out.mu_of_y = mu(y);
  out.abs_tol = weighted_abs_tol(y);
  const double tc = truncation_point(y, mu, table);
  if (tc > table.t_max())
    throw RangeError("weighted_integral: needs checkpoints up to " + fmt(tc) + ", table ends at " + fmt(table.t_max()),
                     tc);
  out.truncation_point = tc;
  out.truncation_err_bound = (tc < out.mu_of_y) ? tail_bound(tc, y, table.B()) : 0.0;

  const auto t = table.t();
  const std::size_t K = table.interval_of(tc);
  const std::size_t full = (tc == t[K + 1]) ? K + 1 : K;
  long double sum = 0.0L;
  for (std::size_t k = 0; k < full; ++k) {
    const double h = t[k + 1] - t[k];
    const double x = -2.0 * h / y;
    const double part = (std::abs(x) <= 1.0) ? moment_series(table.moments(k), x, kMomentCount)
                                             : static_cast<double>(weighted_from(t[k], t[k + 1], y, t[k], kPanelRelTol));
    sum += static_cast<long double>(std::exp(-2.0 * t[k] / y)) * part;
  }
  if (full == K && tc > t[K]) {
    sum += static_cast<long double>(std::exp(-2.0 * t[K] / y)) * weighted_from(t[K], tc, y, t[K], kPanelRelTol);
  }
  out.value = static_cast<double>(sum);
  return out;
}

double weighted_integral_derivative(double y, const MuSpec& mu, const CumulativeTable& table) {
  if (!std::isfinite(y)) throw DomainError("weighted_integral_derivative: y must be finite");
  mu.require_valid(y);
  require_moments(table);
  const double mu_y = mu(y);
  const double tc = truncation_point(y, mu, table);
  if (tc > table.t_max())
    throw RangeError("weighted_integral_derivative: needs checkpoints up to " + fmt(tc), tc);
  const auto t = table.t();
  const std::size_t K = table.interval_of(tc);
  const std::size_t full = (tc == t[K + 1]) ? K + 1 : K;
  long double sum = 0.0L;
  std::array<double, kMomentCount - 1> tm{};
  for (std::size_t k = 0; k < full; ++k) {
    const double h = t[k + 1] - t[k];
    const double x = -2.0 * h / y;
    double part;
    if (std::abs(x) <= 1.0) {
      // int t Z^2 s^j = t_k m_j + h m_{j+1}
      const auto m = table.moments(k);
      for (int j = 0; j < kMomentCount - 1; ++j) tm[j] = t[k] * m[j] + h * m[j + 1];
      part = moment_series(tm, x, kMomentCount - 1);
    } else {
      part = static_cast<double>(t_weighted_from(t[k], t[k + 1], y, t[k], kPanelRelTol));
    }
    sum += static_cast<long double>(std::exp(-2.0 * t[k] / y)) * part;
  }
  if (full == K && tc > t[K]) {
    sum += static_cast<long double>(std::exp(-2.0 * t[K] / y)) * t_weighted_from(t[K], tc, y, t[K], kPanelRelTol);
  }
  double value = static_cast<double>(sum) * 2.0 / (y * y);
  if (tc == mu_y) {
    const double boundary = std::exp(-2.0 * mu_y / y);
    if (boundary > 0.0) value += z2(mu_y) * boundary * mu.derivative(y);
  }
  return value;
}

double tail_integral(double m, double y) {
  if (!(m >= 0.0) || !(y > 0.0)) throw DomainError("tail_integral: need m >= 0 and y > 0");
  const double scale = std::exp(-2.0 * m / y);
  if (scale == 0.0 || 2.0 * m / y > 700.0) return 0.0;
  const double width = 0.5 * y * std::log(1e6);
  const double k = 2.0 / y;
  const long double J = integrate_chunked([=](double t) { return std::exp(-k * (t - m)); }, m, m + width,
                                          kPanelRelTol, Execution::parallel);
  return scale * static_cast<double>(J);
}

}  // namespace ladderlab
