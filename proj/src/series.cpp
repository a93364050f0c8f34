#include "ladderlab/series.hpp"

#include <cmath>
#include <sstream>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

using Series = std::vector<BiPoly>;  // index = power of v

// Truncated product up to order n.
Series mul(const Series& x, const Series& y, int n) {
  Series out(n + 1);
  for (int i = 0; i <= n && i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= n && j < static_cast<int>(y.size()); ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BiPoly BiPoly::constant(const Rational& r) { return monomial(r, 0, 0); }

BiPoly BiPoly::monomial(const Rational& r, int q_power, int a_power) {
  BiPoly p;
  p.add_term({q_power, a_power}, r);
  return p;
}

void BiPoly::add_term(std::pair<int, int> key, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(key, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, v);
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [k1, v1] : terms_)
    for (const auto& [k2, v2] : o.terms_) r.add_term({k1.first + k2.first, k1.second + k2.second}, v1 * v2);
  return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * s);
  return r;
}

Rational BiPoly::coeff(int q_power, int a_power) const {
  const auto it = terms_.find({q_power, a_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

double BiPoly::evaluate(double q, double a) const {
  double s = 0.0;
  for (const auto& [k, v] : terms_) s += static_cast<double>(v) * std::pow(q, k.first) * std::pow(a, k.second);
  return s;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational c = v;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    first = false;
    const bool bare = (k.first != 0 || k.second != 0);
    if (!(bare && c == 1)) out << c << (bare ? "*" : "");
    std::string sep;
    if (k.first > 0) {
      out << "q" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
      sep = "*";
    }
    if (k.second > 0) out << sep << "a" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return out.str();
}

double CoefficientSeries::evaluate(double v, double q, double a) const {
  double s = 0.0, vp = v;
  for (int k = 1; k <= order; ++k) {
    s += coeffs[k].evaluate(q, a) * vp;
    vp *= v;
  }
  return s;
}

CoefficientSeries expansion_A(int n) {
  if (n < 1) throw DomainError("expansion_A: n must be >= 1");
  // x = v (q + S(x)); each pass fixes one more order.
  Series x(n + 1);
  x[1] = BiPoly::monomial(1, 1);
  for (int pass = 1; pass < n; ++pass) {
    Series S(n + 1);
    Series xp = mul(x, x, n);  // x^2
    for (int k = 2; k <= n; ++k) {
      const Rational w = Rational(1) / (Rational(k) * (k - 1));
      for (int i = 0; i <= n; ++i)
        if (!xp[i].is_zero()) S[i] += xp[i] * w;
      xp = mul(xp, x, n);
    }
    Series next(n + 1);
    next[1] = BiPoly::monomial(1, 1);
    for (int i = 1; i < n; ++i) next[i + 1] += S[i];
    x = std::move(next);
  }
  CoefficientSeries out;
  out.order = n;
  out.coeffs = std::move(x);
  out.variable = SeriesVariable::inv_log_tau;
  return out;
}

CoefficientSeries expansion_B(int n) {
  const CoefficientSeries A = expansion_A(n);
  CoefficientSeries out;
  out.order = n;
  out.coeffs.assign(n + 1, BiPoly());
  out.variable = SeriesVariable::inv_log_T;
  // (L - a)^{-k} = sum_m C(k+m-1, m) a^m L^{-k-m}
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= j; ++k) out.coeffs[j] += A[k] * BiPoly::monomial(binomial(j - 1, j - k), 0, j - k);
  return out;
}

CoefficientSeries expansion_B(int n, const Rational& a) {
  CoefficientSeries sym = expansion_B(n);
  for (BiPoly& p : sym.coeffs) {
    BiPoly fixed;
    for (const auto& [k, v] : p.terms()) {
      Rational ap(1);
      for (int i = 0; i < k.second; ++i) ap *= a;
      fixed += BiPoly::monomial(v * ap, k.first, 0);
    }
    p = fixed;
  }
  return sym;
}

double series_S(double x) {
  if (!(x < 1.0)) throw DomainError("series_S: needs x < 1");
  return (1.0 - x) * std::log1p(-x) + x;
}

double series_residual(int n, double L, double q, bool normalized) {
  const CoefficientSeries A = expansion_A(n);
  const double x = A.evaluate(1.0 / L, q);
  const double r = x * L - series_S(x) - q;
  return normalized ? r / L : r;
}

}  // namespace ladderlab
