#include "vortexlab/moment.hpp"

#include <cmath>
#include <cstdint>

namespace vortexlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// Exact up to 20! = 2432902008176640000, inside the int64 range.
double exact_factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return static_cast<double>(f);
}

int level_sign(int arg) {
  if (arg == 1) return -1;
  if (arg == 2) return +1;
  const int k = (arg - 4) / 2;  // 0 for 4!, 1 for 6!, ...
  return k % 3 == 2 ? +1 : -1;  // repeating (-, -, +) triples
}

}  // namespace

void PhysConstants::validate() const {
  if (!std::isfinite(mu_B) || !std::isfinite(alpha))
    throw std::invalid_argument("PhysConstants: non-finite field");
  if (mu_B >= 0.0)
    throw std::invalid_argument("PhysConstants: mu_B must be negative under this convention");
  if (alpha <= 0.007 || alpha >= 0.0074)
    throw std::invalid_argument("PhysConstants: alpha outside (0.007, 0.0074)");
}

PhysConstants PhysConstants::paper_quoted() {
  return {-9.27401452557e-24, 7.2973525693e-3, Provenance::paper_quoted};
}

PhysConstants PhysConstants::standard_tables() {
  return {-9.2740100783e-24, 7.2973525693e-3, Provenance::standard_tables};
}

void FractionSpec::validate() const {
  const bool ok = max_factorial_arg == 1 ||
                  (max_factorial_arg >= 2 && max_factorial_arg <= 18 &&
                   max_factorial_arg % 2 == 0);
  if (!ok)
    throw std::invalid_argument(
        "FractionSpec: max_factorial_arg must be one of 1, 2, 4, ..., 18");
  if (!std::isfinite(tail_value) || tail_value == 0.0)
    throw std::invalid_argument("FractionSpec: tail_value must be finite and nonzero");
}

double alpha_over_2pi(const PhysConstants& c) {
  c.validate();
  return c.alpha / kTwoPi;
}

double term_growth(int n, const PhysConstants& c) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("term_growth: n must lie in [1, 20]");
  return exact_factorial(n) * (c.alpha / kTwoPi);
}

int limiting_index(const PhysConstants& c) {
  int best = 0;
  for (int n = 1; n <= 20; ++n)
    if (term_growth(n, c) < 1.0) best = n;
  return best;
}

MomentResult continued_fraction_mu(const FractionSpec& spec, const PhysConstants& c) {
  spec.validate();
  const double x = c.alpha / kTwoPi;

  MomentResult out;
  out.spec = spec;

  double denom = spec.tail_value;
  for (int arg = spec.max_factorial_arg; arg >= 1; arg = arg == 2 ? 1 : arg - 2) {
    if (std::abs(denom) < 1e-300)
      throw FractionBreakdownError("continued_fraction_mu: denominator vanished below the " +
                                   std::to_string(arg) + "! level");
    const int sign = level_sign(arg);
    const double term = exact_factorial(arg) * x;
    denom = 1.0 + sign * term / denom;
    out.terms.push_back({arg, sign, term, denom});
    if (arg == 1) break;
  }
  if (std::abs(denom) < 1e-300)
    throw FractionBreakdownError("continued_fraction_mu: top-level denominator vanished");
  out.value = c.mu_B / denom;
  return out;
}

double schwinger_mu(const PhysConstants& c) { return c.mu_B * (1.0 + c.alpha / kTwoPi); }

double sommerfield_mu(const PhysConstants& c) {
  const double x = c.alpha / kTwoPi;
  return c.mu_B * (1.0 + x - 1.312 * x * x);
}

}  // namespace vortexlab
