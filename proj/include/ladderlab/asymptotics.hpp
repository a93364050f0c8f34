#pragma once

#include <span>
#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {

inline constexpr double kEpsExponent = 0.01;  // the epsilon of T^{1/3 + eps} fits
inline constexpr double kDefaultDelta0 = 0.01;

// (y/2) ln(y/2) + E y/2 + c0. Throws StateError without a fitted c0.
double F(double y, const Constants& k);
// Derivative of F as defined: (1/2) ln(y/2) + (E + 1)/2.
double F_prime(double y, const Constants& k);
// The derivative as printed in the proof inequalities, (1/2) ln(y/2) + E + 1,
// kept only for reporting the discrepancy.
double F_prime_printed(double y, const Constants& k);

// c0 as the median of I(T) - (phi/2) ln(phi/2) - E phi/2 over the upper half
// of the T grid; uncertainty is half the range of those values. Needs at
// least four points spanning a decade of T.
C0Fit estimate_c0(std::span<const double> T, std::span<const double> I, std::span<const double> phi,
                  const Constants& k);
C0Fit estimate_c0(const LadderTable& ladder, const CumulativeTable& table, const Constants& k);

// r = I(T) - F(phi(T)).
double remainder(double T, const LadderSolver& solver, const Constants& k);
double remainder_from(double I, double phi, const Constants& k);

// T ln T + (2c - 1 - ln 2 pi) T, main terms only.
double balasubramanian(double T, const Constants& k);
// t ln t + (c - ln 2 pi) t.
double omega_fn(double t, const Constants& k);

double x_of_T(double T, double phi);
double pi_approx(double T, double phi, const Constants& k);
// sum_{k=1}^n (k-1)! / ln^k T.
double gauss_li_expansion(double T, int n);
// (1/T) int_2^T dt / ln t by quadrature, for comparison with the expansion.
double gauss_li_mean(double T);

// Chord slope (phi(T+U) - phi(T)) / (2U) of y = phi/2, for any U > 0. The
// slope at U0 = T^{1/3 + 2 eps0} lies outside the range of the tangent law.
double tangent_alpha(double T, double U, const LadderSolver& solver, const Constants& k);
// int_T^{T+U} Z^2 - U ln(e^{-a} phi(T)/2) tan(alpha). Requires 0 < U < T^{1/3 + eps0}.
struct TangentLaw {
  double lhs = 0.0;
  double slope = 0.0;
  double main_term = 0.0;
  double residual = 0.0;
};
TangentLaw tangent_law(double T, double U, const LadderSolver& solver, const Constants& k);
double tangent_law_residual(double T, double U, const LadderSolver& solver, const Constants& k);

// Phi(1/delta) with mu = 7 y ln y minus (1/2delta) ln(1/delta) + D/(2delta) + c0.
double tka_truncated_check(double delta, const CumulativeTable& table, const Constants& k,
                           double delta0 = kDefaultDelta0);
double tka_main_term(double delta, const Constants& k);

}  // namespace ladderlab
