#include "ladderlab/asymptotics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "ladderlab/errors.hpp"

namespace ladderlab {

double F(double y, const Constants& k) {
  const double c0 = k.require_c0();
  if (!(y > 0.0)) throw DomainError("F: y must be > 0");
  return 0.5 * y * std::log(0.5 * y) + k.E * 0.5 * y + c0;
}

double F_prime(double y, const Constants& k) {
  if (!(y > 0.0)) throw DomainError("F_prime: y must be > 0");
  return 0.5 * std::log(0.5 * y) + 0.5 * (k.E + 1.0);
}

double F_prime_printed(double y, const Constants& k) {
  if (!(y > 0.0)) throw DomainError("F_prime_printed: y must be > 0");
  return 0.5 * std::log(0.5 * y) + k.E + 1.0;
}

C0Fit estimate_c0(std::span<const double> T, std::span<const double> I, std::span<const double> phi,
                  const Constants& k) {
  const std::size_t n = T.size();
  if (I.size() != n || phi.size() != n) throw PreconditionError("estimate_c0: column lengths differ");
  if (n < 4) throw PreconditionError("estimate_c0: need at least 4 ladder points");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return T[a] < T[b]; });
  if (!(T[order.back()] >= 10.0 * T[order.front()])) throw PreconditionError("estimate_c0: grid must span a decade of T");
  std::vector<double> v;
  for (std::size_t r = n / 2; r < n; ++r) {
    const std::size_t i = order[r];
    v.push_back(I[i] - 0.5 * phi[i] * std::log(0.5 * phi[i]) - k.E * 0.5 * phi[i]);
  }
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  C0Fit fit;
  fit.value = (m % 2 == 1) ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
  fit.uncertainty = 0.5 * (v.back() - v.front());
  return fit;
}

C0Fit estimate_c0(const LadderTable& ladder, const CumulativeTable& table, const Constants& k) {
  std::vector<double> T, I, phi;
  for (const LadderPoint& p : ladder.points) {
    T.push_back(p.T);
    I.push_back(hl_integral(p.T, table));
    phi.push_back(p.phi);
  }
  return estimate_c0(T, I, phi, k);
}

double remainder_from(double I, double phi, const Constants& k) { return I - F(phi, k); }

double remainder(double T, const LadderSolver& solver, const Constants& k) {
  k.require_c0();
  return remainder_from(hl_integral(T, solver.table()), solver.phi(T), k);
}

double balasubramanian(double T, const Constants& k) {
  if (!(T > 0.0)) throw DomainError("balasubramanian: T must be > 0");
  return T * std::log(T) + (2.0 * k.c - 1.0 - std::log(kTwoPi)) * T;
}

double omega_fn(double t, const Constants& k) {
  if (!(t > 0.0)) throw DomainError("omega_fn: t must be > 0");
  return t * std::log(t) + k.E * t;
}

double x_of_T(double T, double phi) {
  if (!(T > 0.0)) throw DomainError("x_of_T: T must be > 0");
  return (T - 0.5 * phi) / T;
}

double pi_approx(double T, double phi, const Constants& k) {
  if (!(T > 0.0)) throw DomainError("pi_approx: T must be > 0");
  return (T - 0.5 * phi) / k.q();
}

double gauss_li_expansion(double T, int n) {
  if (!(T > 2.0)) throw DomainError("gauss_li_expansion: T must be > 2");
  if (n < 1) throw DomainError("gauss_li_expansion: n must be >= 1");
  const double L = std::log(T);
  double term = 1.0 / L, sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += term;
    term *= k / L;
  }
  return sum;
}

double gauss_li_mean(double T) {
  if (!(T > 2.0)) throw DomainError("gauss_li_mean: T must be > 2");
  using boost::math::quadrature::gauss_kronrod;
  auto f = [](double t) { return 1.0 / std::log(t); };
  return gauss_kronrod<double, 31>::integrate(f, 2.0, T, 20, 1e-13) / T;
}

double tangent_alpha(double T, double U, const LadderSolver& solver, const Constants&) {
  if (!(U > 0.0) || !std::isfinite(U)) throw DomainError("tangent_alpha: need U > 0");
  return (solver.phi(T + U) - solver.phi(T)) / (2.0 * U);
}

TangentLaw tangent_law(double T, double U, const LadderSolver& solver, const Constants& k) {
  if (!(U > 0.0) || !(U < std::pow(T, 1.0 / 3.0 + k.eps0)))
    throw DomainError("tangent_law: need 0 < U < T^(1/3 + eps0)");
  TangentLaw r;
  r.slope = tangent_alpha(T, U, solver, k);
  r.lhs = interval_integral(T, T + U);
  r.main_term = U * (std::log(0.5 * solver.phi(T)) - k.a) * r.slope;
  r.residual = r.lhs - r.main_term;
  return r;
}

double tangent_law_residual(double T, double U, const LadderSolver& solver, const Constants& k) {
  return tangent_law(T, U, solver, k).residual;
}

double tka_main_term(double delta, const Constants& k) {
  return std::log(1.0 / delta) / (2.0 * delta) + k.D / (2.0 * delta) + k.require_c0();
}

double tka_truncated_check(double delta, const CumulativeTable& table, const Constants& k, double delta0) {
  if (!(delta > 0.0) || !(delta <= delta0)) throw DomainError("tka_truncated_check: delta must lie in (0, delta0]");
  const double rhs = tka_main_term(delta, k);
  const double y = 1.0 / delta;
  const MuSpec mu = MuSpec::k_log(kMinimalK, 1.0 / delta0);
  return weighted_integral(y, mu, table).value - rhs;
}

}  // namespace ladderlab
