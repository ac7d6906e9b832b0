#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "envsieve/report.hpp"

namespace envsieve {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// e(t) = exp(2 pi i t).
std::complex<double> unit_phase(double t);

// e(p * alpha) with the product split through fma so the reduced phase stays
// accurate to ~1 ulp even for p near 1e8.
std::complex<double> unit_phase_prod(double p, double alpha);

// Primes in the window (M, M+N]; the exponential sums below run over these.
struct PrimeWindow {
  std::uint64_t M = 0;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> primes;

  std::size_t count() const { return primes.size(); }
  static std::shared_ptr<const PrimeWindow> make(std::uint64_t M, std::uint64_t N);
};

// One complex weight per prime of the window; S(x) = sum_p u_p e(x p).
struct CoefficientSeq {
  std::shared_ptr<const PrimeWindow> window;
  std::vector<std::complex<double>> u;
  double norm2_sq = 0.0;  // sum |u_p|^2
  double norm1 = 0.0;     // sum |u_p|

  static CoefficientSeq make(std::shared_ptr<const PrimeWindow> window,
                             std::vector<std::complex<double>> u);
  void rescale(double factor);
};

// S(alpha) by direct Kahan-compensated summation.
std::complex<double> eval_sum(const CoefficientSeq& coeffs, double alpha);

// S(k/K) for k = 0..K-1 through one DFT: coefficients are binned at p mod K
// and transformed with the e(+pk/K) convention. Agrees with eval_sum to well
// under 1e-9 * sum |u_p| per point.
std::vector<std::complex<double>> eval_on_grid(const CoefficientSeq& coeffs, std::size_t K);

struct MomentResult {
  double value = 0.0;         // K-point average of |S(k/K)|^ell
  double refine_delta = 0.0;  // |avg_K - avg_2K| when the rule is not exact
  std::uint64_t grid_size = 0;
};

// Approximates the circle integral of |S|^ell with K = 2^ceil(log2(
// grid_factor*(M+N))) points. For even integer ell with K > ell*(M+N)/2 the
// rectangle rule is exact (the integrand is a trigonometric polynomial of
// degree below K) and refine_delta is 0; otherwise the K -> 2K delta is
// reported as an error estimate.
MomentResult moment(const CoefficientSeq& coeffs, double ell, std::uint32_t grid_factor = 16);

struct FareyFraction {
  std::uint64_t a = 0;
  std::uint64_t q = 1;
  double value() const { return static_cast<double>(a) / static_cast<double>(q); }
};

// Farey fractions of order Q0 on (0, 1], ascending, with the alternating
// position split: split_even holds x2, x4, ... (1-based positions) and
// split_odd holds x1, x3, .... Consecutive fractions satisfy a'q - aq' = 1
// and q + q' > Q0, so each split is 1/Q0^2-spaced on the circle.
struct FareySystem {
  std::uint64_t Q0 = 0;
  std::vector<FareyFraction> fractions;
  std::vector<std::size_t> split_even;
  std::vector<std::size_t> split_odd;
};
FareySystem farey(std::uint64_t Q0);

// Smallest circular gap of the point multiset reduced mod 1; 0 on duplicates,
// at least 2 points required.
double well_spaced_delta(const std::vector<double>& points);

// Points reduced mod 1, sorted, all distinct (delta > 0).
struct WellSpacedSet {
  std::vector<double> points;
  double delta = 0.0;

  static WellSpacedSet from_points(std::vector<double> points);
};

struct ArcMax {
  double x = 0.0;
  double value = 0.0;  // |S(x)| at the sampled maximum
};

// Dense sampling of |S| over the Farey arc {x : |x - a/q| <= 1/(q Q0)} with
// samples_per_arc+1 equispaced points; a sampled maximum is a safe
// under-estimate of the true arc maximum.
ArcMax arc_max(const CoefficientSeq& coeffs, std::uint64_t a, std::uint64_t q,
               std::uint64_t Q0, std::uint32_t samples_per_arc = 128);

struct LevelSet {
  std::vector<std::size_t> indices;  // positions into the point set
  double gamma = 0.0;                // sum of |S| over the members
};

// Members x of X with |S(x)| >= xi * B (threshold inclusive).
LevelSet level_set(const WellSpacedSet& X, const CoefficientSeq& coeffs,
                   double xi, double B);

// T(q, beta) = sum over primes p | q inside the window of
// e(p beta) (c_q(p) - mu(q)); satisfies |T| <= q, which is asserted.
std::complex<double> t_term(std::uint64_t q, double beta, const PrimeWindow& window);

}  // namespace envsieve
