// Multiplicative primitives: linear-sieve tables, segmented prime windows,
// Ramanujan sums (exact closed form and floating cross-check), and interval
// primorials.

#include "envsieve/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "envsieve/errors.hpp"
#include "envsieve/kahan.hpp"

namespace envsieve {

std::uint64_t ArithTables::squarefree_kernel(std::uint64_t n) const {
  std::uint64_t k = 1;
  while (n > 1) {
    const std::uint64_t p = spf[n];
    k *= p;
    while (n % p == 0) n /= p;
  }
  return k;
}

ArithTables build_tables(std::uint64_t limit) {
  if (limit < 2) throw UsageError("build_tables: limit must be >= 2");
  if (limit > (1ull << 31))
    throw ResourceError("build_tables: limit " + std::to_string(limit) +
                        " exceeds the 2^31 table budget");
  ArithTables t;
  t.limit = limit;
  t.spf.assign(limit + 1, 0);
  t.mobius.assign(limit + 1, 0);
  t.phi.assign(limit + 1, 0);
  t.omega.assign(limit + 1, 0);
  t.mobius[1] = 1;
  t.phi[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (t.spf[n] == 0) {
      t.spf[n] = static_cast<std::uint32_t>(n);
      t.primes.push_back(n);
      t.mobius[n] = -1;
      t.phi[n] = n - 1;
      t.omega[n] = 1;
    }
    // Each composite p*n with p <= spf(n) is struck exactly once.
    for (std::uint64_t p : t.primes) {
      if (p > t.spf[n] || p > limit / n) break;
      const std::uint64_t m = p * n;
      t.spf[m] = static_cast<std::uint32_t>(p);
      if (n % p == 0) {
        t.mobius[m] = 0;
        t.phi[m] = t.phi[n] * p;
        t.omega[m] = t.omega[n];
      } else {
        t.mobius[m] = static_cast<std::int8_t>(-t.mobius[n]);
        t.phi[m] = t.phi[n] * (p - 1);
        t.omega[m] = static_cast<std::uint8_t>(t.omega[n] + 1);
      }
    }
  }
  return t;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi <= lo) return out;

  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
  while (root > 1 && root * root > hi) --root;
  while ((root + 1) * (root + 1) <= hi) ++root;
  if (root < 2) root = 2;

  std::vector<char> base(root + 1, 1);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  }

  const std::uint64_t first = std::max<std::uint64_t>(lo + 1, 2);
  constexpr std::uint64_t kSegment = 1u << 16;
  std::vector<char> seg;
  for (std::uint64_t low = first; low <= hi; low += kSegment) {
    const std::uint64_t high = std::min(hi, low + kSegment - 1);
    seg.assign(high - low + 1, 1);
    for (std::uint64_t p : base_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (std::uint64_t v = low; v <= high; ++v)
      if (seg[v - low]) out.push_back(v);
    if (high == hi) break;  // avoids low overflow at the top of the range
  }
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

namespace {

std::uint64_t phi_from_factors(const std::vector<std::pair<std::uint64_t, int>>& f) {
  std::uint64_t r = 1;
  for (auto [p, e] : f) {
    r *= p - 1;
    for (int i = 1; i < e; ++i) r *= p;
  }
  return r;
}

}  // namespace

std::int64_t ramanujan_von_sterneck(std::uint64_t q, std::int64_t n) {
  if (q == 0) throw UsageError("ramanujan_von_sterneck: q must be >= 1");
  if (q == 1) return 1;
  std::int64_t nm = n % static_cast<std::int64_t>(q);
  if (nm < 0) nm += static_cast<std::int64_t>(q);
  const std::uint64_t g = std::gcd(q, static_cast<std::uint64_t>(nm));  // gcd(q, 0) = q
  const std::uint64_t m = q / g;

  const auto fq = factorize(q);
  int mu = 1;
  {
    std::uint64_t r = m;
    for (const auto& [p, e] : fq) {
      (void)e;
      if (r % p == 0) {
        r /= p;
        if (r % p == 0) return 0;  // square divides q/g
        mu = -mu;
      }
    }
  }
  const std::uint64_t phi_q = phi_from_factors(fq);
  const std::uint64_t phi_m = phi_from_factors(factorize(m));
  return mu * static_cast<std::int64_t>(phi_q / phi_m);
}

RamanujanDirect ramanujan_direct(std::uint64_t q, std::int64_t n) {
  if (q == 0) throw UsageError("ramanujan_direct: q must be >= 1");
  std::int64_t nm = n % static_cast<std::int64_t>(q);
  if (nm < 0) nm += static_cast<std::int64_t>(q);
  const std::uint64_t nr = static_cast<std::uint64_t>(nm);

  KahanSum re, im;
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    // n*a mod q keeps the argument of sin/cos below 2 pi.
    const std::uint64_t t =
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(nr) * a % q);
    const double ang = two_pi * (static_cast<double>(t) / static_cast<double>(q));
    re.add(std::cos(ang));
    im.add(std::sin(ang));
  }
  const double v = re.value();
  const double residual = std::hypot(v - std::round(v), im.value());
  if (residual > 1e-6)
    throw NumericalError("ramanujan_direct: residual " + std::to_string(residual) +
                         " at q=" + std::to_string(q) + " n=" + std::to_string(n));
  return {v, residual};
}

BigInt primorial_interval(double z0, double z) {
  if (!(z0 >= 2.0) || !(z0 <= z))
    throw UsageError("primorial_interval: need 2 <= z0 <= z");
  if (z > 1e12)
    throw ResourceError("primorial_interval: z beyond the 1e12 sieve budget");
  const auto hi = static_cast<std::uint64_t>(std::floor(z));
  const auto lo_excl = static_cast<std::uint64_t>(std::ceil(z0)) - 1;
  BigInt prod = 1;
  for (std::uint64_t p : primes_in(lo_excl, hi)) prod *= static_cast<unsigned long>(p);
  return prod;
}

}  // namespace envsieve
