#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace ladderlab {

struct RootResult {
  double root = 0.0;      // best iterate, |f(root)| <= |f| at the other bracket end
  double lo = 0.0;        // final sign-change bracket
  double hi = 0.0;
  double f_root = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Brent's zeroin: inverse quadratic / secant steps with bisection fallback.
// Requires f(a) and f(b) of opposite sign (or one of them zero). Stops when the
// bracket is narrower than about xtol.
template <class F>
RootResult brent_root(F&& f, double a, double b, double fa, double fb, double xtol, int max_iter = 200) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  RootResult out;
  if (fa == 0.0) return {a, a, a, 0.0, 0, true};
  if (fb == 0.0) return {b, b, b, 0.0, 0, true};
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) {
      out = {b, std::min(b, c), std::max(b, c), fb, iter, true};
      return out;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (m > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  out = {b, std::min(b, c), std::max(b, c), fb, max_iter, false};
  return out;
}

}  // namespace ladderlab
