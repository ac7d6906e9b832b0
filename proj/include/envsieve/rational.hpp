#pragma once

#include <gmpxx.h>

#include <string>

namespace envsieve {

// Exact rational arithmetic carries every sieve identity so equality can be
// asserted bit for bit. mpq_class keeps values reduced with a positive
// denominator, which is exactly the canonical-form invariant we rely on.
using Rat = mpq_class;
using BigInt = mpz_class;

// num/den with explicit canonicalization; use for literals like 1/phi(l).
inline Rat rat_frac(long num, unsigned long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Every finite double is a dyadic rational, so this conversion is exact.
inline Rat rat_from_double(double x) { return Rat(x); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// "1", "-4/5": integers drop the denominator.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// floor(r); the result must fit in a signed long.
inline long rat_floor_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace envsieve
