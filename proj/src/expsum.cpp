// Weighted prime exponential sums S(x) = sum_p u_p e(x p) over a window
// (M, M+N]: direct evaluation, the DFT fast path for uniform grids, circle
// moments with an honest refinement delta, Farey systems with their
// unimodular-neighbor recurrence, well-spaced sets, arc maxima, level sets,
// and the Ramanujan-twisted term T(q, beta).

#include "envsieve/expsum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "envsieve/arith.hpp"
#include "envsieve/errors.hpp"
#include "envsieve/kahan.hpp"

namespace envsieve {

std::complex<double> unit_phase(double t) {
  const double frac = t - std::floor(t);
  const double ang = kTwoPi * frac;
  return {std::cos(ang), std::sin(ang)};
}

std::complex<double> unit_phase_prod(double p, double alpha) {
  // Split p*alpha into hi + lo exactly, reduce hi mod 1 (exact below 2^52),
  // and fold the correction back in: the reduced phase is good to ~1 ulp.
  const double hi = p * alpha;
  const double lo = std::fma(p, alpha, -hi);
  const double t = (hi - std::floor(hi)) + lo;
  const double ang = kTwoPi * t;
  return {std::cos(ang), std::sin(ang)};
}

std::shared_ptr<const PrimeWindow> PrimeWindow::make(std::uint64_t M, std::uint64_t N) {
  if (N == 0) throw UsageError("PrimeWindow: N must be >= 1");
  if (M > (1ull << 40) || N > (1ull << 40))
    throw ResourceError("PrimeWindow: window beyond the 2^40 sieve budget");
  auto w = std::make_shared<PrimeWindow>();
  w->M = M;
  w->N = N;
  w->primes = primes_in(M, M + N);
  return w;
}

CoefficientSeq CoefficientSeq::make(std::shared_ptr<const PrimeWindow> window,
                                    std::vector<std::complex<double>> u) {
  if (!window) throw UsageError("CoefficientSeq: null window");
  if (u.size() != window->primes.size())
    throw UsageError("CoefficientSeq: one coefficient per window prime required");
  CoefficientSeq c;
  c.window = std::move(window);
  c.u = std::move(u);
  KahanSum n2, n1;
  for (const auto& v : c.u) {
    n2.add(std::norm(v));
    n1.add(std::abs(v));
  }
  c.norm2_sq = n2.value();
  c.norm1 = n1.value();
  return c;
}

void CoefficientSeq::rescale(double factor) {
  for (auto& v : u) v *= factor;
  KahanSum n2, n1;
  for (const auto& v : u) {
    n2.add(std::norm(v));
    n1.add(std::abs(v));
  }
  norm2_sq = n2.value();
  norm1 = n1.value();
}

std::complex<double> eval_sum(const CoefficientSeq& coeffs, double alpha) {
  KahanComplex acc;
  const auto& primes = coeffs.window->primes;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& w = coeffs.u[i];
    if (w.real() == 0.0 && w.imag() == 0.0) continue;
    acc.add(w * unit_phase_prod(static_cast<double>(primes[i]), alpha));
  }
  return acc.value();
}

std::vector<std::complex<double>> eval_on_grid(const CoefficientSeq& coeffs, std::size_t K) {
  if (K == 0) throw UsageError("eval_on_grid: K must be >= 1");
  if (K > (1u << 27))
    throw ResourceError("eval_on_grid: K=" + std::to_string(K) +
                        " exceeds the 2^27-point grid budget");
  std::vector<std::complex<double>> buf(K, {0.0, 0.0});
  const auto& primes = coeffs.window->primes;
  for (std::size_t i = 0; i < primes.size(); ++i) buf[primes[i] % K] += coeffs.u[i];
  // e(+pk/K) convention = sign +1 transform; binning at p mod K is lossless
  // because e(pk/K) only sees p mod K.
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(K),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return buf;
}

namespace {

double grid_average_pow(const CoefficientSeq& coeffs, std::size_t K, double ell) {
  const auto grid = eval_on_grid(coeffs, K);
  const bool is_square = ell == 2.0;
  const bool is_fourth = ell == 4.0;
  KahanSum acc;
  for (const auto& v : grid) {
    const double s2 = std::norm(v);
    if (is_square)
      acc.add(s2);
    else if (is_fourth)
      acc.add(s2 * s2);
    else
      acc.add(std::pow(s2, 0.5 * ell));
  }
  return acc.value() / static_cast<double>(K);
}

}  // namespace

MomentResult moment(const CoefficientSeq& coeffs, double ell, std::uint32_t grid_factor) {
  if (!(ell >= 2.0)) throw UsageError("moment: ell must be >= 2");
  if (grid_factor == 0) throw UsageError("moment: grid_factor must be >= 1");
  const std::uint64_t span = coeffs.window->M + coeffs.window->N;
  const std::uint64_t K =
      std::bit_ceil(std::max<std::uint64_t>(grid_factor * span, 2));

  MomentResult r;
  r.grid_size = K;
  r.value = grid_average_pow(coeffs, K, ell);
  const bool even_integer = ell == std::floor(ell) && std::fmod(ell, 2.0) == 0.0;
  // |S|^ell is then a trigonometric polynomial of degree ell*(M+N)/2 at most,
  // so the K-point rectangle rule integrates it exactly once K exceeds that.
  const bool exact = even_integer && static_cast<double>(K) > ell * static_cast<double>(span) / 2.0;
  if (!exact)
    r.refine_delta = std::abs(r.value - grid_average_pow(coeffs, 2 * K, ell));
  return r;
}

FareySystem farey(std::uint64_t Q0) {
  if (Q0 < 2) throw UsageError("farey: Q0 must be >= 2");
  FareySystem F;
  F.Q0 = Q0;
  // Next-term recurrence seeded with the virtual pair 0/1, 1/Q0: integer
  // only, each step k = floor((Q0 + b)/d), e/f = (k c - a)/(k d - b).
  std::uint64_t a = 0, b = 1, c = 1, d = Q0;
  while (true) {
    F.fractions.push_back({c, d});
    if (c == 1 && d == 1) break;
    const std::uint64_t k = (Q0 + b) / d;
    const std::uint64_t e = k * c - a;
    const std::uint64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  for (std::size_t i = 0; i < F.fractions.size(); ++i) {
    if ((i + 1) % 2 == 0)
      F.split_even.push_back(i);
    else
      F.split_odd.push_back(i);
  }
  return F;
}

double well_spaced_delta(const std::vector<double>& points) {
  if (points.size() < 2) throw UsageError("well_spaced_delta: need at least 2 points");
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = points[i] - std::floor(points[i]);
  std::sort(v.begin(), v.end());
  double best = 1.0 - (v.back() - v.front());  // wrap-around gap
  for (std::size_t i = 0; i + 1 < v.size(); ++i) best = std::min(best, v[i + 1] - v[i]);
  return std::max(best, 0.0);
}

WellSpacedSet WellSpacedSet::from_points(std::vector<double> points) {
  WellSpacedSet X;
  if (points.empty()) throw UsageError("WellSpacedSet: no points");
  for (auto& x : points) x -= std::floor(x);
  std::sort(points.begin(), points.end());
  X.delta = points.size() >= 2 ? well_spaced_delta(points) : 1.0;
  if (X.delta <= 0.0) throw UsageError("WellSpacedSet: points must be distinct mod 1");
  X.points = std::move(points);
  return X;
}

ArcMax arc_max(const CoefficientSeq& coeffs, std::uint64_t a, std::uint64_t q,
               std::uint64_t Q0, std::uint32_t samples_per_arc) {
  if (q == 0 || a == 0 || a > q || std::gcd(a, q) != 1)
    throw UsageError("arc_max: need a/q in lowest terms with 1 <= a <= q");
  if (Q0 < q) throw UsageError("arc_max: need q <= Q0");
  if (samples_per_arc == 0) throw UsageError("arc_max: need at least 1 sample");
  const double center = static_cast<double>(a) / static_cast<double>(q);
  const double halfw = 1.0 / (static_cast<double>(q) * static_cast<double>(Q0));
  const double step = 2.0 * halfw / samples_per_arc;
  ArcMax best;
  for (std::uint32_t j = 0; j <= samples_per_arc; ++j) {
    const double x = center - halfw + step * j;
    const double v = std::abs(eval_sum(coeffs, x));
    if (j == 0 || v > best.value) best = {x, v};
  }
  return best;
}

LevelSet level_set(const WellSpacedSet& X, const CoefficientSeq& coeffs,
                   double xi, double B) {
  if (!(xi > 0.0)) throw UsageError("level_set: xi must be > 0");
  if (!(B > 0.0)) throw UsageError("level_set: B must be > 0");
  LevelSet ls;
  KahanSum gamma;
  const double threshold = xi * B;
  for (std::size_t i = 0; i < X.points.size(); ++i) {
    const double v = std::abs(eval_sum(coeffs, X.points[i]));
    if (v >= threshold) {
      ls.indices.push_back(i);
      gamma.add(v);
    }
  }
  ls.gamma = gamma.value();
  return ls;
}

std::complex<double> t_term(std::uint64_t q, double beta, const PrimeWindow& window) {
  if (q == 0) throw UsageError("t_term: q must be >= 1");
  const auto fq = factorize(q);
  int mu = 1;
  bool squarefree = true;
  for (const auto& [p, e] : fq) {
    (void)p;
    if (e > 1) squarefree = false;
    mu = -mu;
  }
  const std::int64_t mu_q = squarefree ? mu : 0;

  KahanComplex acc;
  for (const auto& [p, e] : fq) {
    (void)e;
    if (p <= window.M || p > window.M + window.N) continue;
    const std::int64_t c = ramanujan_von_sterneck(q, static_cast<std::int64_t>(p));
    acc.add(unit_phase_prod(static_cast<double>(p), beta) *
            static_cast<double>(c - mu_q));
  }
  const auto sum = acc.value();
  if (std::abs(sum) > static_cast<double>(q) * (1.0 + 1e-9) + 1e-9)
    throw InternalCheckError("t_term: |T(q, beta)| <= q violated at q=" +
                             std::to_string(q));
  return sum;
}

}  // namespace envsieve
