// Multiplicative primitives against trial-division oracles. Every frozen
// constant here was computed by hand or by the independent oracles in this
// file before the sieve code ran.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "envsieve/arith.hpp"
#include "envsieve/errors.hpp"

using namespace envsieve;

namespace {

int mobius_oracle(std::uint64_t n) {
  int m = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

std::uint64_t phi_oracle(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

int omega_oracle(std::uint64_t n) {
  int w = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ++w;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++w;
  return w;
}

bool is_prime_oracle(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors_oracle(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

}  // namespace

TEST_CASE("linear sieve tables match trial division") {
  const auto t = build_tables(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    CAPTURE(n);
    REQUIRE(static_cast<int>(t.mobius[n]) == mobius_oracle(n));
    REQUIRE(t.phi[n] == phi_oracle(n));
    REQUIRE(static_cast<int>(t.omega[n]) == omega_oracle(n));
  }
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    std::uint64_t p = 2;
    while (n % p) ++p;
    REQUIRE(t.spf[n] == p);
  }
  const int first_mobius[10] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (int n = 1; n <= 10; ++n) CHECK(static_cast<int>(t.mobius[n]) == first_mobius[n - 1]);
  CHECK(t.primes.size() == 669);  // pi(5000)
  CHECK(t.squarefree(30));
  CHECK_FALSE(t.squarefree(12));
  CHECK(t.squarefree_kernel(360) == 30);
  CHECK(t.squarefree_kernel(1) == 1);
  CHECK(t.squarefree_kernel(97) == 97);
}

TEST_CASE("table construction rejects bad limits") {
  CHECK_THROWS_AS(build_tables(0), UsageError);
  CHECK_THROWS_AS(build_tables(1), UsageError);
  CHECK_THROWS_AS(build_tables(std::uint64_t{1} << 32), ResourceError);
}

TEST_CASE("segmented prime windows") {
  CHECK(primes_in(0, 1000).size() == 168);  // pi(1000)
  CHECK(primes_in(10, 30) == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
  CHECK(primes_in(100, 100).empty());
  CHECK(primes_in(24, 28).empty());
  // straddle a 2^16 segment boundary
  const auto got = primes_in(65500, 65700);
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 65501; n <= 65700; ++n)
    if (is_prime_oracle(n)) want.push_back(n);
  CHECK(got == want);
}

TEST_CASE("factorization by trial division") {
  using F = std::vector<std::pair<std::uint64_t, int>>;
  CHECK(factorize(1) == F{});
  CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == F{{97, 1}});
  CHECK(factorize(2 * 3 * 5 * 7 * 11) == F{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}});
}

TEST_CASE("Ramanujan sums: frozen values and identities") {
  CHECK(ramanujan_von_sterneck(1, 7) == 1);
  CHECK(ramanujan_von_sterneck(6, 3) == -2);
  CHECK(ramanujan_von_sterneck(4, 2) == -2);
  CHECK(ramanujan_von_sterneck(5, 0) == 4);    // c_q(0) = phi(q)
  CHECK(ramanujan_von_sterneck(12, 0) == 4);
  CHECK(ramanujan_von_sterneck(7, 7) == 6);    // q | n gives phi(q)
  CHECK(ramanujan_von_sterneck(7, 3) == -1);   // prime q, q does not divide n

  // periodicity, including negative arguments
  for (std::uint64_t q : {2ull, 6ull, 9ull, 30ull})
    for (std::int64_t n = -15; n <= 15; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      REQUIRE(ramanujan_von_sterneck(q, n) ==
              ramanujan_von_sterneck(q, n + static_cast<std::int64_t>(q)));
    }

  // sum over d | q of c_d(n) is q when q | n and 0 otherwise
  for (std::uint64_t q = 1; q <= 60; ++q)
    for (std::int64_t n = 0; n <= 25; ++n) {
      std::int64_t s = 0;
      for (std::uint64_t d : divisors_oracle(q))
        s += ramanujan_von_sterneck(d, n);
      CAPTURE(q);
      CAPTURE(n);
      REQUIRE(s == (n % static_cast<std::int64_t>(q) == 0
                        ? static_cast<std::int64_t>(q)
                        : 0));
    }
}

TEST_CASE("Ramanujan sums: exact path agrees with the floating oracle") {
  for (std::uint64_t q = 1; q <= 120; ++q)
    for (std::int64_t n = -10; n <= 130; ++n) {
      const auto exact = ramanujan_von_sterneck(q, n);
      const auto direct = ramanujan_direct(q, n);
      CAPTURE(q);
      CAPTURE(n);
      REQUIRE(direct.residual <= 1e-6);
      REQUIRE(static_cast<std::int64_t>(std::llround(direct.value)) == exact);
    }
}

TEST_CASE("divisor-sum identities over the tables") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::int64_t mu_sum = 0;
    std::uint64_t phi_sum = 0;
    for (std::uint64_t d : divisors_oracle(n)) {
      mu_sum += mobius_oracle(d);
      phi_sum += phi_oracle(d);
    }
    CAPTURE(n);
    REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    REQUIRE(phi_sum == n);
  }
}

TEST_CASE("interval primorials") {
  CHECK(primorial_interval(3, 11) == 1155);  // 3*5*7*11
  CHECK(primorial_interval(2, 2) == 2);
  CHECK(primorial_interval(4, 4) == 1);      // empty prime range
  CHECK(primorial_interval(2, 10) == 210);
  CHECK_THROWS_AS(primorial_interval(1, 5), UsageError);
  CHECK_THROWS_AS(primorial_interval(5, 4), UsageError);
  CHECK_THROWS_AS(primorial_interval(2, 2e12), ResourceError);
}
