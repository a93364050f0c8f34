#pragma once

#include <string>
#include <vector>

namespace ladderlab {

enum class MuFamily {
  k_log,  // mu(y) = K y ln y, K >= 7
  beam,   // mu(y) = y^2 [1 + rho (y - y0)^n]
};

// One member of the admissible class: smooth, increasing, and mu(y) >= 7 y ln y
// from validity_from on.
class MuSpec {
 public:
  static MuSpec k_log(double K, double y0 = 100.0);
  static MuSpec beam(double rho, int n, double y0 = 100.0);

  MuFamily family() const { return family_; }
  double K() const { return K_; }
  double rho() const { return rho_; }
  int n() const { return n_; }
  double y0() const { return y0_; }
  double validity_from() const { return validity_from_; }
  // First y the ladder can use: max(y0, validity_from).
  double start() const { return validity_from_ > y0_ ? validity_from_ : y0_; }

  double operator()(double y) const;
  double derivative(double y) const;
  bool satisfies_bound(double y) const;  // mu(y) >= 7 y ln y
  // Throws PreconditionError naming the member when y is outside its validity range.
  void require_valid(double y) const;
  std::string name() const;

 private:
  MuSpec(MuFamily family, double K, double rho, int n, double y0);
  MuFamily family_;
  double K_ = 0.0;
  double rho_ = 0.0;
  int n_ = 0;
  double y0_ = 0.0;
  double validity_from_ = 0.0;
};

inline constexpr double kMinimalK = 7.0;

// Checks mu(y) >= 7 y ln y at both ends and on a geometric grid of `points`
// between them; returns the first failing y, or a negative value when none.
double first_violation(const MuSpec& mu, double y_lo, double y_hi, int points = 2000);

}  // namespace ladderlab
