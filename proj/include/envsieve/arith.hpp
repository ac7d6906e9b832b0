#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "envsieve/rational.hpp"

namespace envsieve {

// Multiplicative bookkeeping for 1..limit out of one linear-sieve pass:
// smallest prime factor, Mobius mu, Euler phi, count of distinct primes.
struct ArithTables {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> spf;     // spf[n] for n >= 2; spf[0] = spf[1] = 0
  std::vector<std::int8_t> mobius;    // mu(n); 0 when a square divides n
  std::vector<std::uint64_t> phi;     // Euler totient
  std::vector<std::uint8_t> omega;    // distinct prime factors
  std::vector<std::uint64_t> primes;  // primes <= limit, ascending

  bool squarefree(std::uint64_t n) const { return mobius[n] != 0; }

  // Product of the distinct primes dividing n.
  std::uint64_t squarefree_kernel(std::uint64_t n) const;
};

ArithTables build_tables(std::uint64_t limit);

// Primes p with lo < p <= hi by segmented Eratosthenes; empty window is fine.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// prime -> exponent by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Ramanujan sum c_q(n) = mu(q/g) * phi(q) / phi(q/g), g = gcd(q, n mod q).
// Exact in integers: phi(q/g) divides phi(q). Periodic in n, so n may be <= 0.
std::int64_t ramanujan_von_sterneck(std::uint64_t q, std::int64_t n);

struct RamanujanDirect {
  double value;     // real part of the root-of-unity sum
  double residual;  // distance to the nearest integer, stray imaginary part included
};

// Direct summation of e(na/q) over a coprime to q; floating-point oracle for
// the exact path above. A residual beyond 1e-6 raises NumericalError.
RamanujanDirect ramanujan_direct(std::uint64_t q, std::int64_t n);

// Product of the primes p with z0 <= p <= z; 1 on an empty range.
BigInt primorial_interval(double z0, double z);

}  // namespace envsieve
