#pragma once

#include <optional>
#include <string_view>

namespace ladderlab {

// Euler's constant to 50 decimal digits.
inline constexpr std::string_view kEulerGammaDigits =
    "0.57721566490153286060651209008240243104215933593992";

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

struct C0Fit {
  double value = 0.0;
  double uncertainty = 0.0;
};

// The fixed real constants of the second-moment asymptotics. Everything but c0
// is derived from the Euler constant at long double precision; c0 is fitted
// from ladder data and attached later.
struct Constants {
  double c = 0.0;      // Euler's constant
  double E = 0.0;      // c - ln(2 pi)
  double D = 0.0;      // c - ln(4 pi)
  double a = 0.0;      // ln(2 pi) - 1 - c
  double eps0 = 0.0;   // 1/108
  std::optional<C0Fit> c0;

  double q() const { return 1.0 - c; }
  double require_c0() const;
  Constants with_c0(C0Fit fit) const;
};

Constants make_constants();

}  // namespace ladderlab
