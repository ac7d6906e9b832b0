#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "envsieve/expsum.hpp"
#include "envsieve/report.hpp"

namespace envsieve {

// Coefficient families used by the randomized harnesses.
enum class CoeffKind {
  unit,            // u_p = 1
  random_phase,    // |u_p| = 1, uniform phase
  concentrated,    // u_p = e(-p x0): aligns S at x0
  sparse,          // u_p in {0, 1}, Bernoulli(density)
  random_complex,  // re, im uniform in [-1, 1]
};

const char* coeff_kind_name(CoeffKind kind);
CoeffKind coeff_kind_from_name(const std::string& name);

struct CoeffModel {
  CoeffKind kind = CoeffKind::unit;
  std::uint64_t seed = 0;
  double x0 = 0.0;        // concentrated only
  double density = 0.25;  // sparse only
  // Scale down so that sum |u_p|^2 <= count of window primes.
  bool cap_l2_to_count = false;
};

// Deterministic for a fixed model: the generator is seeded from model.seed
// and doubles are derived as (rng() >> 11) * 2^-53 on every platform.
CoefficientSeq gen_coeffs(const CoeffModel& model,
                          std::shared_ptr<const PrimeWindow> window);

// k points at (i + 0.4 * jitter_i)/k, jitter in [0, 1): circular gaps are at
// least 0.6/k, so the set is honestly well-spaced with a known delta.
WellSpacedSet jittered_lattice(std::uint64_t seed, std::size_t k);

// sum_{x in X} |S(x)|^2 <= 280 (N + 1/delta) / log N * log(2|X|) * sum |u_p|^2
// (window (M, M+N], N >= 1000).
VerificationReport verify_well_spaced_l2(const WellSpacedSet& X,
                                         const CoefficientSeq& coeffs);

// Dual form: sum over window primes p of |sum_{b in B} f(b) e(b p)|^2
// <= 280 (N + 1/delta) ||f||_2^2 log(2 ||f||_1^2 / ||f||_2^2) / log N.
VerificationReport verify_dual_l2(const WellSpacedSet& B,
                                  const std::vector<std::complex<double>>& f,
                                  const PrimeWindow& window);

// Moment over a well-spaced set, h > 0, with B^2 = (N + 1/delta)/log N * sum|u|^2:
//   sum_{x in X} |S(x)|^(2+h) <= C(h) * B^(2+h),
// C(h) = 7000 ((1 + 3/(2 log N))^h + 1/h) for M = 0 and
// C(h) = 14000 (2^h + 1/h) for a shifted window. Also audits the level-set
// decomposition Gamma(xi) >= xi B |X_xi| the proof slices the sum with.
VerificationReport verify_moment_bound(const WellSpacedSet& X,
                                       const CoefficientSeq& coeffs, double h);

// Integral moment: int_0^1 |S|^(2+h) <= C(h)/N * (2N/log N * sum |u_p|^2)^(1+h/2)
// with the same two constant families.
VerificationReport verify_integral_moment(const CoefficientSeq& coeffs, double h,
                                          std::uint32_t grid_factor = 16);

// Majorant property of the full integral moment, N >= 1e6, sum |u|^2 <= pi(N):
// the ell-th root of the moment of S is at most 1e5 times that of the unit
// sequence on the same window. For a shifted window (M >= sqrt(N)) the
// implied constant is only reported, never judged.
VerificationReport verify_majorant(const CoefficientSeq& coeffs, double ell,
                                   std::uint32_t grid_factor = 16);

// Farey arc maxima: sum over fractions a/q of F(Q0) of max over the arc
// |x - a/q| <= 1/(q Q0) of |S(x)|^2 <= 1200 N log Q0 / log N * sum |u_p|^2
// for 2 <= Q0 <= sqrt(N). Arc maxima are read from one shared DFT grid fine
// enough to give every arc its sample quota.
VerificationReport verify_farey_maxarc(const CoefficientSeq& coeffs, std::uint64_t Q0,
                                       std::uint32_t samples_per_arc = 128);

// prime_count_bounds: pi(x) <= x/log x (1 + 3/(2 log x)) and <= 5x/(4 log x)
// for x >= 114, pi(x) >= x/log x for x >= 17, checked at every integer up to
// 1e6. log_inversion: y/log y <= t with y >= 2, t >= e forces y <= 2 t log t.
std::vector<VerificationReport> check_misc_lemmas();

// Canonical harness names and the aliases the CLI accepts for them.
std::string canonical_theorem_id(const std::string& name);
std::vector<std::string> known_theorem_ids();

struct TrialSweepConfig {
  std::string theorem;  // canonical id or alias
  int trials = 200;
  std::uint64_t seed = 0;
  std::uint64_t n_min = 1000;
  std::uint64_t n_max = 50000;
  std::vector<std::uint64_t> m_values{0, 10000};
  std::vector<double> h_values{0.1, 0.5, 1.0, 3.0};
  std::vector<double> ell_values{2.5, 4.0};
  std::vector<CoeffKind> models{CoeffKind::unit, CoeffKind::random_phase,
                                CoeffKind::concentrated, CoeffKind::sparse,
                                CoeffKind::random_complex};
  std::uint32_t grid_factor = 16;
  std::uint32_t samples_per_arc = 128;
  std::size_t max_points = 400;  // cap on |X| resp. |B|
  std::uint64_t q0 = 0;          // farey harness: fixed Q0, 0 = randomize
};

struct SweepSummary {
  std::vector<VerificationReport> reports;
  double max_ratio = 0.0;  // sharpness telemetry across the sweep
  int failures = 0;
};

// Runs cfg.trials randomized instances of one harness. Per-trial seeds are
// cfg.seed ^ trial_index; window sizes, point sets and models are drawn from
// the per-trial generator, so a sweep is reproducible from (theorem, seed).
SweepSummary run_trials(const TrialSweepConfig& cfg);

}  // namespace envsieve
