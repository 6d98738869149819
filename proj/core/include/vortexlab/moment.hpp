#pragma once

// Electron magnetic-moment calculators: the leading radiative correction
// mu_B(1 + a/2pi), the second-order form mu_B(1 + a/2pi - 1.312 (a/2pi)^2),
// and a factorial continued fraction
//   mu_e = mu_B / (1 - x/(1 + 2!x/(1 - 4!x/(1 - 6!x/(1 + 8!x/(...)))))),
// x = a/2pi, with partial denominators closing on 1 and signs repeating
// (-,-,+) in factorial-argument triples below the first two levels.
// Also the growth diagnostic n!x and the largest n with n!x < 1, beyond
// which deeper terms stop acting as small corrections.

#include <stdexcept>
#include <string>
#include <vector>

namespace vortexlab {

struct PhysConstants {
  enum class Provenance { paper_quoted, standard_tables };

  double mu_B = 0.0;   // Bohr magneton, J/T, negative by convention here
  double alpha = 0.0;  // fine structure constant
  Provenance provenance = Provenance::standard_tables;

  // mu_B < 0 and alpha within (0.007, 0.0074); both presets satisfy this.
  void validate() const;

  static PhysConstants paper_quoted();
  static PhysConstants standard_tables();
};

// Reduced Planck constant, J*s.
inline constexpr double hbar_si = 1.054571817e-34;

struct FractionSpec {
  // Largest factorial argument kept; the included arguments are
  // 1, 2, 4, 6, ..., max_factorial_arg.
  int max_factorial_arg = 18;
  double tail_value = 1.0;  // closes the innermost level

  void validate() const;
};

struct FractionTerm {
  int factorial_arg = 0;
  int sign = 0;                      // -1 or +1 as printed
  double term = 0.0;                 // factorial_arg! * x
  double partial_denominator = 0.0;  // 1 + sign*term/deeper, after this level
};

struct MomentResult {
  double value = 0.0;
  std::vector<FractionTerm> terms;  // innermost level first
  FractionSpec spec;
};

// A partial denominator fell below 1e-300 in magnitude; carries the level.
struct FractionBreakdownError : std::runtime_error {
  explicit FractionBreakdownError(const std::string& what) : std::runtime_error(what) {}
};

double alpha_over_2pi(const PhysConstants& c);

// n! * alpha/2pi with the factorial in exact integer arithmetic; n in [1, 20].
double term_growth(int n, const PhysConstants& c);

// Largest n in [1, 20] with n! * alpha/2pi < 1; 0 when already n=1 fails.
int limiting_index(const PhysConstants& c);

MomentResult continued_fraction_mu(const FractionSpec& spec, const PhysConstants& c);

// mu_B (1 + alpha/2pi).
double schwinger_mu(const PhysConstants& c);

// mu_B (1 + alpha/2pi - 1.312 (alpha/2pi)^2).
double sommerfield_mu(const PhysConstants& c);

}  // namespace vortexlab
