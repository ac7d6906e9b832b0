#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "envsieve/rational.hpp"
#include "envsieve/report.hpp"

namespace envsieve {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SieveParams {
  double z0 = 2.0;
  double z = 2.0;
};

// Selberg-style enveloping sieve for the integers free of prime factors in
// the closed range [z0, z]:
//
//   beta(n) = (sum_{d | n, d in support} lambda_d)^2,
//
// where the support is the set of squarefree d <= z all of whose prime
// factors lie in [z0, z], and
//
//   lambda_d = mu(d) d G_d(z/d; z0) / (phi(d) G(z; z0)).
//
// beta also expands over Ramanujan sums,
//
//   beta(n) = sum_{q in support, q <= z^2} w_q c_q(n),
//   w_q     = mu(q) G_[q](z; z0) / (phi(q) G(z; z0)^2),
//
// and both routes are kept exactly rational so they can be compared bit for
// bit. beta(n) >= 1 on the sieved set, beta(n) >= 0 everywhere.
struct EnvelopingSieve {
  SieveParams params;
  std::vector<std::uint64_t> range_primes;             // primes in [z0, z]
  std::vector<std::pair<std::uint64_t, Rat>> lambdas;  // (d, lambda_d), d ascending
  std::vector<std::pair<std::uint64_t, Rat>> weights;  // (q, w_q), q ascending
  Rat g_total;                                         // G(z; z0)

  const Rat* lambda(std::uint64_t d) const;  // nullptr outside the support
  const Rat* weight(std::uint64_t q) const;
};

// Enumerates both supports (products of range primes up to z, resp. z^2) and
// fills the tables from the closed forms above. node_budget caps the walk.
EnvelopingSieve build_sieve(const SieveParams& params,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// w_q recomputed from the raw double sum
//   w_q = sum over pairs (d1, d2) with q | [d1, d2] of
//         lambda_d1 lambda_d2 / [d1, d2];
// independent of the closed form, so it serves as its oracle.
Rat weight_oracle(const EnvelopingSieve& sieve, std::uint64_t q);
Rat weight_oracle(const SieveParams& params, std::uint64_t q,
                  std::uint64_t node_budget = kDefaultNodeBudget);

// The two routes to beta(n); exact rationals, n >= 1.
Rat beta_by_definition(const EnvelopingSieve& sieve, std::uint64_t n);
Rat beta_by_fourier(const EnvelopingSieve& sieve, std::uint64_t n);

// Exhaustive exact checks for n <= n_max: the two beta routes agree, beta is
// a square hence >= 0, beta(n) = 1 exactly when n has no prime factor in
// [z0, z], and the lambda/weight tables satisfy their size bounds
// (lambda_1 = 1, |lambda_d| <= 1, w_1 = 1/G, |G w_q| <= 3^omega(q)/phi(q),
// and for z0 >= 4 also |w_q| <= 6 log z0 / (sqrt(q) log z)).
VerificationReport check_envelope(const EnvelopingSieve& sieve, std::uint64_t n_max);

}  // namespace envsieve
