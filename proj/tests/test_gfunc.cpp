// G-function evaluations against a deliberately naive brute-force oracle,
// frozen hand-computed rationals, and a small run of the inequality sweep.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>

#include "envsieve/errors.hpp"
#include "envsieve/gfunc.hpp"
#include "envsieve/rational.hpp"

using namespace envsieve;

namespace {

bool squarefree_oracle(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
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

// smallest prime factor; 1 has none, which the caller treats as "no small one"
std::uint64_t spf_oracle(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

Rat g_oracle(double y, double z0, std::uint64_t d) {
  Rat s = 0;
  if (y < 1.0) return s;
  const auto top = static_cast<std::uint64_t>(std::floor(y));
  for (std::uint64_t l = 1; l <= top; ++l) {
    if (!squarefree_oracle(l)) continue;
    if (l > 1 && static_cast<double>(spf_oracle(l)) < z0) continue;
    if (std::gcd(l, d) != 1) continue;
    s += rat_frac(1, phi_oracle(l));
  }
  return s;
}

}  // namespace

TEST_CASE("g_value matches the brute-force oracle") {
  for (double z0 : {2.0, 3.0, 5.0})
    for (std::uint64_t d : {1ull, 2ull, 6ull, 30ull, 210ull})
      for (double y : {0.5, 1.0, 2.0, 2.9, 3.0, 10.0, 30.7, 101.0}) {
        CAPTURE(z0);
        CAPTURE(d);
        CAPTURE(y);
        REQUIRE(g_value({y, z0, d}) == g_oracle(y, z0, d));
      }
}

TEST_CASE("g_value frozen small values") {
  CHECK(g_value({1.0, 2.0, 1}) == 1);
  CHECK(g_value({3.0, 2.0, 1}) == rat_frac(5, 2));   // 1 + 1/phi(2) + 1/phi(3)
  CHECK(g_value({3.0, 2.0, 2}) == rat_frac(3, 2));   // l in {1, 3}
  CHECK(g_value({0.99, 2.0, 1}) == 0);
  CHECK(g_value({2.0, 3.0, 1}) == 1);                // 2 is sieved out by z0=3
  CHECK(g_value_at(Rat(3), 2.0, 1) == rat_frac(5, 2));
}

TEST_CASE("g_value rejects bad arguments") {
  CHECK_THROWS_AS(g_value({3.0, 1.0, 1}), UsageError);
  CHECK_THROWS_AS(g_value({3.0, 2.0, 4}), UsageError);  // d not squarefree
}

TEST_CASE("xi frozen values and closed form at full cutoff") {
  CHECK(xi_factor(1, Rat(1)) == 1);
  CHECK(xi_factor(1, rat_frac(1, 2)) == 0);
  CHECK(xi_factor(2, Rat(3)) == 2);
  CHECK(xi_factor(3, Rat(3)) == rat_frac(3, 2));
  CHECK(xi_factor(6, Rat(3)) == 2);
  CHECK(xi_factor(5, Rat(3)) == 0);                 // every triple needs 5 <= y
  CHECK(xi_factor(5, Rat(5)) == rat_frac(5, 4));
  // xi_q(y) = q/phi(q) once y >= q
  for (std::uint64_t q : {2ull, 6ull, 30ull, 210ull}) {
    CAPTURE(q);
    CHECK(xi_factor(q, Rat(static_cast<unsigned long>(q))) ==
          rat_frac(static_cast<long>(q), phi_oracle(q)));
    CHECK(xi_factor(q, Rat(static_cast<unsigned long>(3 * q))) ==
          rat_frac(static_cast<long>(q), phi_oracle(q)));
  }
}

TEST_CASE("xi is bounded by 3^omega") {
  for (std::uint64_t q = 1; q <= 70; ++q) {
    if (!squarefree_oracle(q)) continue;
    int omega = 0;
    std::uint64_t m = q;
    for (std::uint64_t p = 2; p <= m; ++p)
      if (m % p == 0) {
        ++omega;
        while (m % p == 0) m /= p;
      }
    Rat bound = 1;
    for (int i = 0; i < omega; ++i) bound *= 3;
    for (double y : {0.5, 1.0, 2.0, 5.0, 17.3, 50.0, 100.0}) {
      const Rat v = xi_factor(q, rat_from_double(y));
      CAPTURE(q);
      CAPTURE(y);
      REQUIRE(abs(v) <= bound);
    }
  }
}

TEST_CASE("xi rejects non-squarefree q") {
  CHECK_THROWS_AS(xi_factor(4, Rat(10)), UsageError);
  CHECK_THROWS_AS(xi_factor(18, Rat(10)), UsageError);
}

TEST_CASE("g_bracket frozen values and the q=1 identity") {
  CHECK(g_bracket(2, 3.0, 2.0) == 2);
  CHECK(g_bracket(3, 3.0, 2.0) == rat_frac(3, 2));
  CHECK(g_bracket(6, 3.0, 2.0) == 2);
  // xi_1 is identically 1 on y >= 1, so G_[1](z; z0) collapses to G(z; z0)
  for (double z : {2.0, 3.0, 10.5, 30.0})
    for (double z0 : {2.0, 3.0}) {
      if (z0 > z) continue;
      CAPTURE(z);
      CAPTURE(z0);
      REQUIRE(g_bracket(1, z, z0) == g_value({z, z0, 1}));
    }
  CHECK_THROWS_AS(g_bracket(4, 3.0, 2.0), UsageError);
  CHECK_THROWS_AS(g_bracket(2, 3.0, 1.0), UsageError);
}

TEST_CASE("inequality sweep passes on a reduced grid") {
  GLemmaGrid grid;
  grid.z0_values = {2, 3};
  grid.d_values = {1, 2, 3, 6, 10};
  grid.y_values = {1, 2, 3, 5, 10, 30};
  grid.g_log_z_max = 300;
  grid.sum_D_max = 300;
  grid.h_values = {0.5, 1.0};
  grid.mertens_z0_max = 500;
  const auto reports = check_g_lemmas(grid);
  CHECK(reports.size() == 7);
  for (const auto& r : reports) {
    CAPTURE(r.theorem_id);
    CHECK(r.pass);
    CHECK(r.ratio <= 1.0);
  }
}
