// Construction of the enveloping sieve: support enumeration, the lambda and
// w tables from their closed forms, both routes to beta(n), and the
// exhaustive exactness check. All identities are carried in exact rationals;
// no floating point enters any value in this translation unit.

#include "envsieve/envelope.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "envsieve/arith.hpp"
#include "envsieve/errors.hpp"
#include "envsieve/gfunc.hpp"

namespace envsieve {

namespace {

struct SupportEntry {
  std::uint64_t value;
  int mu;
  std::uint64_t phi;
};

// All products of subsets of primes (ascending) staying <= limit, with
// mu and phi accumulated along the walk. budget counts visited nodes.
void enumerate_products(const std::vector<std::uint64_t>& primes, std::uint64_t limit,
                        std::uint64_t& budget, std::size_t idx, std::uint64_t value,
                        int mu, std::uint64_t phi, std::vector<SupportEntry>& out) {
  if (budget == 0)
    throw ResourceError("support enumeration exceeded its node budget");
  --budget;
  out.push_back({value, mu, phi});
  for (std::size_t i = idx; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p > limit / value) break;  // value * p > limit; primes ascend
    enumerate_products(primes, limit, budget, i + 1, value * p, -mu, phi * (p - 1), out);
  }
}

std::vector<SupportEntry> support_up_to(const std::vector<std::uint64_t>& primes,
                                        std::uint64_t limit, std::uint64_t& budget) {
  std::vector<SupportEntry> out;
  enumerate_products(primes, limit, budget, 0, 1, 1, 1, out);
  std::sort(out.begin(), out.end(),
            [](const SupportEntry& a, const SupportEntry& b) { return a.value < b.value; });
  return out;
}

const Rat* table_lookup(const std::vector<std::pair<std::uint64_t, Rat>>& table,
                        std::uint64_t key) {
  auto it = std::lower_bound(table.begin(), table.end(), key,
                             [](const auto& entry, std::uint64_t k) { return entry.first < k; });
  if (it == table.end() || it->first != key) return nullptr;
  return &it->second;
}

}  // namespace

const Rat* EnvelopingSieve::lambda(std::uint64_t d) const { return table_lookup(lambdas, d); }
const Rat* EnvelopingSieve::weight(std::uint64_t q) const { return table_lookup(weights, q); }

EnvelopingSieve build_sieve(const SieveParams& params, std::uint64_t node_budget) {
  if (!(params.z0 >= 2.0) || !(params.z0 <= params.z))
    throw UsageError("build_sieve: need 2 <= z0 <= z");
  if (params.z > 3e7)
    throw ResourceError("build_sieve: z beyond the 3e7 support budget");

  EnvelopingSieve s;
  s.params = params;
  const double z = params.z;
  const double z0 = params.z0;
  s.range_primes = primes_in(static_cast<std::uint64_t>(std::ceil(z0)) - 1,
                             static_cast<std::uint64_t>(std::floor(z)));

  const Rat zr = rat_from_double(z);
  s.g_total = g_value_at(zr, z0, 1);

  std::uint64_t budget = node_budget;
  const auto dmax = static_cast<std::uint64_t>(std::floor(z));
  for (const auto& e : support_up_to(s.range_primes, dmax, budget)) {
    // lambda_d = mu(d) d G_d(z/d; z0) / (phi(d) G(z; z0))
    Rat lam = g_value_at(zr / static_cast<unsigned long>(e.value), z0, e.value);
    lam *= rat_frac(e.mu * static_cast<long>(e.value), e.phi);
    lam /= s.g_total;
    s.lambdas.emplace_back(e.value, lam);
  }

  // q <= z^2 decided exactly: qmax = floor(z^2) in rationals.
  const Rat z2 = zr * zr;
  const auto qmax = static_cast<std::uint64_t>(rat_floor_long(z2));
  for (const auto& e : support_up_to(s.range_primes, qmax, budget)) {
    // w_q = mu(q) G_[q](z; z0) / (phi(q) G(z; z0)^2)
    Rat w = g_bracket(e.value, z, z0);
    w *= rat_frac(e.mu, e.phi);
    w /= s.g_total * s.g_total;
    s.weights.emplace_back(e.value, w);
  }
  return s;
}

Rat weight_oracle(const EnvelopingSieve& sieve, std::uint64_t q) {
  if (q == 0) throw UsageError("weight_oracle: q must be >= 1");
  // w_q = sum over lambda-support pairs with q | lcm(d1, d2) of
  //       lambda_d1 lambda_d2 / lcm(d1, d2).
  Rat sum = 0;
  for (const auto& [d1, l1] : sieve.lambdas) {
    for (const auto& [d2, l2] : sieve.lambdas) {
      const std::uint64_t l = std::lcm(d1, d2);
      if (l % q != 0) continue;
      sum += l1 * l2 / static_cast<unsigned long>(l);
    }
  }
  return sum;
}

Rat weight_oracle(const SieveParams& params, std::uint64_t q, std::uint64_t node_budget) {
  return weight_oracle(build_sieve(params, node_budget), q);
}

Rat beta_by_definition(const EnvelopingSieve& sieve, std::uint64_t n) {
  if (n == 0) throw UsageError("beta_by_definition: n must be >= 1");
  // Divisors of n inside the lambda support are exactly the subsets of n's
  // distinct prime factors from [z0, z] whose product stays <= z.
  std::vector<std::uint64_t> ps;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    if (static_cast<double>(p) >= sieve.params.z0 && static_cast<double>(p) <= sieve.params.z)
      ps.push_back(p);
  }
  const auto dmax = static_cast<std::uint64_t>(std::floor(sieve.params.z));
  Rat sum = 0;
  std::uint64_t budget = ~0ull;  // <= 2^omega subsets, no budget pressure
  std::vector<SupportEntry> subs;
  enumerate_products(ps, dmax, budget, 0, 1, 1, 1, subs);
  for (const auto& e : subs) {
    const Rat* lam = sieve.lambda(e.value);
    if (lam == nullptr)
      throw InternalCheckError("beta_by_definition: support divisor missing from table");
    sum += *lam;
  }
  return sum * sum;
}

Rat beta_by_fourier(const EnvelopingSieve& sieve, std::uint64_t n) {
  if (n == 0) throw UsageError("beta_by_fourier: n must be >= 1");
  Rat sum = 0;
  for (const auto& [q, w] : sieve.weights) {
    const std::int64_t c = ramanujan_von_sterneck(q, static_cast<std::int64_t>(n));
    if (c != 0) sum += w * static_cast<long>(c);
  }
  return sum;
}

VerificationReport check_envelope(const EnvelopingSieve& sieve, std::uint64_t n_max) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.theorem_id = "envelope_check";
  const double z0 = sieve.params.z0;
  const double z = sieve.params.z;
  rep.param("z0", z0);
  rep.param("z", z);
  rep.param("n_max", n_max);
  rep.param("lambda_count", static_cast<std::uint64_t>(sieve.lambdas.size()));
  rep.param("weight_count", static_cast<std::uint64_t>(sieve.weights.size()));
  rep.param("g_total", rat_str(sieve.g_total));

  std::int64_t violations = 0;
  std::string witness;
  auto flag = [&](const std::string& what) {
    if (violations == 0) witness = what;
    ++violations;
  };

  // Table-level bounds first.
  const Rat* l1 = sieve.lambda(1);
  if (l1 == nullptr || *l1 != 1) flag("lambda_1 != 1");
  for (const auto& [d, lam] : sieve.lambdas)
    if (abs(lam) > 1) flag("lambda size bound at d=" + std::to_string(d));
  const Rat* w1 = sieve.weight(1);
  if (w1 == nullptr || *w1 * sieve.g_total != 1) flag("w_1 != 1/G");
  const auto qmax = static_cast<std::uint64_t>(
      rat_floor_long(rat_from_double(z) * rat_from_double(z)));
  for (const auto& [q, w] : sieve.weights) {
    if (q > qmax) flag("weight support beyond z^2 at q=" + std::to_string(q));
    std::uint64_t phi = 1;
    long three_omega = 1;
    for (const auto& [p, e] : factorize(q)) {
      (void)e;
      phi *= p - 1;
      three_omega *= 3;
    }
    // |G w_q| <= 3^omega(q) / phi(q), exact on both sides.
    if (abs(w * sieve.g_total) * static_cast<unsigned long>(phi) > three_omega)
      flag("ramanujan weight bound at q=" + std::to_string(q));
    // |w_q| <= 6 log z0 / (sqrt(q) log z) once z0 >= 4.
    if (z0 >= 4.0) {
      const double lhs = rat_to_double(abs(w)) * std::sqrt(static_cast<double>(q));
      const double rhs = 6.0 * std::log(z0) / std::log(z);
      if (lhs > rhs * (1 + 1e-9)) flag("weight decay bound at q=" + std::to_string(q));
    }
  }

  // Pointwise checks: both routes agree, beta >= 0, beta = 1 exactly off the
  // sieved set (in particular at every prime beyond z).
  std::uint64_t checked = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Rat bd = beta_by_definition(sieve, n);
    const Rat bf = beta_by_fourier(sieve, n);
    if (bd != bf) flag("fourier mismatch at n=" + std::to_string(n));
    if (bd < 0) flag("negative beta at n=" + std::to_string(n));
    bool clean = true;  // no prime factor in [z0, z]
    for (const auto& [p, e] : factorize(n)) {
      (void)e;
      if (static_cast<double>(p) >= z0 && static_cast<double>(p) <= z) clean = false;
    }
    if (clean != (bd == 1)) flag("indicator mismatch at n=" + std::to_string(n));
    ++checked;
  }
  rep.param("n_checked", checked);

  rep.lhs = static_cast<double>(violations);
  rep.rhs = 0.0;
  rep.ratio = violations == 0 ? 0.0 : 2.0;
  rep.pass = violations == 0;
  rep.param("violations", violations);
  if (violations) rep.param("witness", witness);
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace envsieve
