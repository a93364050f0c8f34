#include "ladderlab/constants.hpp"

#include <cmath>
#include <string>

#include "ladderlab/errors.hpp"

namespace ladderlab {

double Constants::require_c0() const {
  if (!c0) throw StateError("c0 has not been fitted; run estimate_c0 first");
  return c0->value;
}

Constants Constants::with_c0(C0Fit fit) const {
  Constants k = *this;
  k.c0 = fit;
  return k;
}

Constants make_constants() {
  const long double c = std::stold(std::string(kEulerGammaDigits));
  const long double ln2pi = std::log(2.0L * 3.141592653589793238462643383279502884L);
  Constants k;
  k.c = static_cast<double>(c);
  k.E = static_cast<double>(c - ln2pi);
  k.D = static_cast<double>(c - ln2pi - std::log(2.0L));
  k.a = static_cast<double>(ln2pi - 1.0L - c);
  k.eps0 = 1.0 / 108.0;
  return k;
}

}  // namespace ladderlab
