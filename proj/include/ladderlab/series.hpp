#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/constants.hpp"

namespace ladderlab {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial with rational coefficients in q = 1 - c and the shift a.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly constant(const Rational& r);
  static BiPoly monomial(const Rational& r, int q_power, int a_power = 0);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rational& r) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of q^i a^j.
  Rational coeff(int q_power, int a_power = 0) const;
  double evaluate(double q, double a = 0.0) const;
  std::string to_string() const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

 private:
  void add_term(std::pair<int, int> key, const Rational& r);
  std::map<std::pair<int, int>, Rational> terms_;
};

enum class SeriesVariable { inv_log_tau, inv_log_T };

// coeffs[k] multiplies v^k (v = 1/ln tau for the A-series, 1/ln T for the B-series);
// coeffs[0] is zero.
struct CoefficientSeries {
  int order = 0;
  std::vector<BiPoly> coeffs;
  SeriesVariable variable = SeriesVariable::inv_log_tau;

  const BiPoly& operator[](int k) const { return coeffs.at(k); }
  double evaluate(double v, double q, double a = 0.0) const;
};

// Solves x ln(tau) - sum_{k>=2} x^k / (k(k-1)) = q order by order in v = 1/ln tau.
CoefficientSeries expansion_A(int n);
// Re-expands sum_k A_k / (ln T - a)^k in powers of 1/ln T (a kept symbolic).
CoefficientSeries expansion_B(int n);
// Same with a fixed numerically (a = 0 returns the A-series).
CoefficientSeries expansion_B(int n, const Rational& a);

// S(x) = sum_{k>=2} x^k/(k(k-1)) = (1 - x) ln(1 - x) + x.
double series_S(double x);
// Residual of the truncated A-series in the defining equation at ln tau = L:
// x_n L - S(x_n) - q. Divided by L when `normalized`, which makes it O(L^{-(n+1)}).
double series_residual(int n, double L, double q, bool normalized);

}  // namespace ladderlab
