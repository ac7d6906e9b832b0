#pragma once

#include <cstdint>
#include <vector>

#include "envsieve/rational.hpp"
#include "envsieve/report.hpp"

namespace envsieve {

// Euler-Mascheroni constant, used by the Mertens-type lower bounds.
inline constexpr double kEulerGamma = 0.5772156649015329;

// Cutoff query for
//   G_d(y; z0) = sum over squarefree l <= y, coprime to d and to every prime
//                below z0, of 1/phi(l),
// the quantity all sieve weights are normalized by. Depends on y only through
// floor(y). G(y) is shorthand for G_1(y; 2).
struct GQuery {
  double y = 1.0;
  double z0 = 2.0;
  std::uint64_t d = 1;  // must be squarefree
};

// Exact evaluation; y < 1 gives the empty sum 0.
Rat g_value(const GQuery& query);

// Same with an exact rational cutoff, for callers that must not round y.
Rat g_value_at(const Rat& y, double z0, std::uint64_t d);

// xi_q(y) = sum over ordered factorizations q = q1*q2*q3 with q1*q3 <= y and
// q2*q3 <= y of mu(q3) * phi2(q3) / phi(q3), where phi2(m) = prod_{p|m}(p-2)
// runs over the primes dividing q3. Equals q/phi(q) once y >= q, and
// |xi_q(y)| <= 3^omega(q) always. q must be squarefree.
Rat xi_factor(std::uint64_t q, const Rat& y);

// G_[q](z; z0) = sum over squarefree l <= z/sqrt(q), coprime to q and to the
// primes below z0, of xi_q(z/l)/phi(l). The l-cutoff is decided exactly via
// l^2 * q <= z^2 in rationals, never through a floating sqrt.
Rat g_bracket(std::uint64_t q, double z, double z0);

// Grid for the inequality sweep below; the defaults match the battery the
// acceptance suite runs.
struct GLemmaGrid {
  std::vector<double> z0_values{2, 3, 5, 7};
  std::vector<std::uint64_t> d_values;  // default 1..30
  std::vector<double> y_values;         // default quasi-log grid up to 200
  double g_log_z_max = 1e4;             // G(z) >= log z sweep
  double sum_D_max = 1e4;               // phi power sum cutoffs
  std::vector<double> h_values{0.01, 0.1, 0.5, 1, 2};
  double mertens_z0_max = 1e5;          // prod_{p<z0}(p-1)/p sweep
};

// Numerically checks the support inequalities:
//   g_divisor_scaling    G(y*d; z0) >= d/phi(d) G_d(y; z0) >= G(y; z0)
//   g_small_prime_product prod_{p<z0} p/(p-1) * G(z; z0) >= G(z)
//   phi_power_sum        sum_{l<=y} mu^2(l)/phi(l)^(1+h) >= sum_{q<=y} q^-(1+h)
//   g_log_lower          G(z) >= log z
//   mertens_lower        prod_{p<z0} (p-1)/p >= e^-gamma / log(2 z0)
//   g_sieved_log_lower   G(z; z0) >= e^-gamma log z / log(2 z0)
//   phi_power_sum_closed sum_{d<=D} mu^2(d)/phi(d)^(1+h) >= (1 - D^-h)/h
// One report per inequality, worst instance recorded.
std::vector<VerificationReport> check_g_lemmas(const GLemmaGrid& grid = GLemmaGrid{});

}  // namespace envsieve
