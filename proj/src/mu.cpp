#include "ladderlab/mu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

double lower_bound_fn(double y) { return kMinimalK * y * std::log(y); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Grid range used to certify validity once the crossing is known.
constexpr double kCertifyUpTo = 1e8;

}  // namespace

MuSpec::MuSpec(MuFamily family, double K, double rho, int n, double y0)
    : family_(family), K_(K), rho_(rho), n_(n), y0_(y0) {
  if (!(y0 > 1.0) || !std::isfinite(y0)) throw PreconditionError("mu: y0 must be a finite value > 1");
  // mu - 7 y ln y is increasing for the admissible parameter ranges, so the
  // validity range is [crossing, inf); locate the crossing by bisection.
  double lo = y0;
  if (!satisfies_bound(lo)) {
    double hi = 2.0 * lo;
    while (!satisfies_bound(hi)) {
      hi *= 2.0;
      if (hi > kCertifyUpTo) throw PreconditionError(name() + ": never reaches mu(y) >= 7 y ln y");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (satisfies_bound(mid) ? hi : lo) = mid;
    }
    lo = hi;
  }
  validity_from_ = lo;
  const double bad = first_violation(*this, validity_from_, kCertifyUpTo);
  if (bad >= 0.0) throw PreconditionError(name() + ": mu(y) < 7 y ln y at y = " + fmt(bad));
}

MuSpec MuSpec::k_log(double K, double y0) {
  if (!(K >= kMinimalK) || !std::isfinite(K)) throw PreconditionError("mu k_log: K must be >= 7, got " + fmt(K));
  return MuSpec(MuFamily::k_log, K, 0.0, 0, y0);
}

MuSpec MuSpec::beam(double rho, int n, double y0) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw PreconditionError("mu beam: rho must be >= 0, got " + fmt(rho));
  if (n < 1) throw PreconditionError("mu beam: n must be >= 1");
  return MuSpec(MuFamily::beam, 0.0, rho, n, y0);
}

double MuSpec::operator()(double y) const {
  if (family_ == MuFamily::k_log) return K_ * y * std::log(y);
  const double d = y - y0_;
  return y * y * (1.0 + rho_ * std::pow(d, n_));
}

double MuSpec::derivative(double y) const {
  if (family_ == MuFamily::k_log) return K_ * (std::log(y) + 1.0);
  const double d = y - y0_;
  return 2.0 * y * (1.0 + rho_ * std::pow(d, n_)) + y * y * rho_ * n_ * std::pow(d, n_ - 1);
}

bool MuSpec::satisfies_bound(double y) const { return y > 1.0 && (*this)(y) >= lower_bound_fn(y); }

void MuSpec::require_valid(double y) const {
  if (!(y >= start())) {
    throw PreconditionError(name() + ": y = " + fmt(y) + " below the validity start " + fmt(start()));
  }
}

std::string MuSpec::name() const {
  if (family_ == MuFamily::k_log) return "k_log(K=" + fmt(K_) + ",y0=" + fmt(y0_) + ")";
  return "beam(rho=" + fmt(rho_) + ",n=" + std::to_string(n_) + ",y0=" + fmt(y0_) + ")";
}

double first_violation(const MuSpec& mu, double y_lo, double y_hi, int points) {
  if (!mu.satisfies_bound(y_lo)) return y_lo;
  if (!mu.satisfies_bound(y_hi)) return y_hi;
  const double ratio = std::log(y_hi / y_lo) / std::max(points - 1, 1);
  for (int i = 1; i < points - 1; ++i) {
    const double y = y_lo * std::exp(ratio * i);
    if (!mu.satisfies_bound(y)) return y;
  }
  return -1.0;
}

}  // namespace ladderlab
