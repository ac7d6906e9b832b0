// Randomized verification harnesses: each one builds the two sides of a
// large-sieve-type inequality for concrete data and reports the ratio.
// Constants in play:
//   well-spaced L2 and its dual      280 (N + 1/delta) / log N * log(2 |X|)
//   moment over a well-spaced set    7000 ((1 + 3/(2 log N))^h + 1/h)   (M=0)
//                                    14000 (2^h + 1/h)                  (M>0)
//   integral moment                  same families, scaled by (1/N) (2N/log N ...)^(1+h/2)
//   majorant comparison              threshold 1e5 on the ell-norm ratio
//   Farey arc maxima                 1200 N log Q0 / log N
// Hypothesis violations (N too small, norms too large, Q0 out of range) are
// surfaced as errors distinct from a falsified inequality.

#include "envsieve/verify.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "envsieve/arith.hpp"
#include "envsieve/errors.hpp"
#include "envsieve/kahan.hpp"

namespace envsieve {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Uniform double in [0, 1) from the top 53 bits: identical on every platform.
double rng01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

void stamp_window(VerificationReport& rep, const PrimeWindow& w, const CoefficientSeq* c) {
  rep.param("M", w.M);
  rep.param("N", w.N);
  rep.param("R", static_cast<std::uint64_t>(w.count()));
  if (c) {
    rep.param("norm2_sq", c->norm2_sq);
    rep.param("norm1", c->norm1);
  }
}

void require_window(const PrimeWindow& w, const char* who) {
  if (w.N < 1000)
    throw HypothesisError(std::string(who) + ": hypothesis N >= 1000 fails (N=" +
                          std::to_string(w.N) + ")");
}

double log_n(const PrimeWindow& w) { return std::log(static_cast<double>(w.N)); }

}  // namespace

const char* coeff_kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::unit: return "unit";
    case CoeffKind::random_phase: return "random_phase";
    case CoeffKind::concentrated: return "concentrated";
    case CoeffKind::sparse: return "sparse";
    case CoeffKind::random_complex: return "random_complex";
  }
  return "unknown";
}

CoeffKind coeff_kind_from_name(const std::string& name) {
  if (name == "unit") return CoeffKind::unit;
  if (name == "random_phase") return CoeffKind::random_phase;
  if (name == "concentrated") return CoeffKind::concentrated;
  if (name == "sparse") return CoeffKind::sparse;
  if (name == "random_complex") return CoeffKind::random_complex;
  throw UsageError("unknown coefficient model '" + name +
                   "' (unit, random_phase, concentrated, sparse, random_complex)");
}

CoefficientSeq gen_coeffs(const CoeffModel& model, std::shared_ptr<const PrimeWindow> window) {
  if (!window) throw UsageError("gen_coeffs: null window");
  std::mt19937_64 rng(model.seed);
  const auto& primes = window->primes;
  std::vector<std::complex<double>> u(primes.size());
  switch (model.kind) {
    case CoeffKind::unit:
      std::fill(u.begin(), u.end(), std::complex<double>{1.0, 0.0});
      break;
    case CoeffKind::random_phase:
      for (auto& v : u) v = unit_phase(rng01(rng));
      break;
    case CoeffKind::concentrated:
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = unit_phase_prod(static_cast<double>(primes[i]), -model.x0);
      break;
    case CoeffKind::sparse:
      for (auto& v : u) v = rng01(rng) < model.density ? 1.0 : 0.0;
      break;
    case CoeffKind::random_complex:
      for (auto& v : u) {
        const double re = 2.0 * rng01(rng) - 1.0;
        const double im = 2.0 * rng01(rng) - 1.0;
        v = {re, im};
      }
      break;
  }
  auto c = CoefficientSeq::make(std::move(window), std::move(u));
  const auto R = static_cast<double>(c.window->count());
  if (model.cap_l2_to_count && c.norm2_sq > R && c.norm2_sq > 0.0)
    c.rescale(std::sqrt(R / c.norm2_sq));
  return c;
}

WellSpacedSet jittered_lattice(std::uint64_t seed, std::size_t k) {
  if (k == 0) throw UsageError("jittered_lattice: k must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> pts(k);
  for (std::size_t i = 0; i < k; ++i)
    pts[i] = (static_cast<double>(i) + 0.4 * rng01(rng)) / static_cast<double>(k);
  return WellSpacedSet::from_points(std::move(pts));
}

VerificationReport verify_well_spaced_l2(const WellSpacedSet& X, const CoefficientSeq& coeffs) {
  Timer tm;
  const auto& w = *coeffs.window;
  require_window(w, "wellspaced_l2");
  if (X.points.empty()) throw UsageError("wellspaced_l2: X must be non-empty");

  KahanSum lhs;
  for (double x : X.points) lhs.add(std::norm(eval_sum(coeffs, x)));
  const double rhs = 280.0 * (static_cast<double>(w.N) + 1.0 / X.delta) / log_n(w) *
                     std::log(2.0 * static_cast<double>(X.points.size())) * coeffs.norm2_sq;

  VerificationReport rep;
  rep.theorem_id = "wellspaced_l2";
  stamp_window(rep, w, &coeffs);
  rep.param("points", static_cast<std::uint64_t>(X.points.size()));
  rep.param("delta", X.delta);
  rep.lhs = lhs.value();
  rep.rhs = rhs;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.pass = rep.lhs <= rep.rhs;
  rep.elapsed_ms = tm.ms();
  return rep;
}

VerificationReport verify_dual_l2(const WellSpacedSet& B,
                                  const std::vector<std::complex<double>>& f,
                                  const PrimeWindow& window) {
  Timer tm;
  require_window(window, "dual_l2");
  if (B.points.size() != f.size())
    throw UsageError("dual_l2: one coefficient per point required");
  if (B.points.empty()) throw UsageError("dual_l2: B must be non-empty");

  KahanSum l1_acc, l2_acc;
  for (const auto& v : f) {
    l1_acc.add(std::abs(v));
    l2_acc.add(std::norm(v));
  }
  const double l1 = l1_acc.value();
  const double l2sq = l2_acc.value();
  // (sum |f|)^2 >= sum |f|^2 always; anything else is a summation bug.
  if (l1 * l1 < l2sq * (1.0 - 1e-12))
    throw InternalCheckError("dual_l2: norm ordering violated");

  KahanSum lhs;
  for (std::uint64_t p : window.primes) {
    KahanComplex inner;
    for (std::size_t j = 0; j < f.size(); ++j)
      inner.add(f[j] * unit_phase_prod(static_cast<double>(p), B.points[j]));
    lhs.add(std::norm(inner.value()));
  }

  double rhs = 0.0;
  if (l2sq > 0.0)
    rhs = 280.0 * (static_cast<double>(window.N) + 1.0 / B.delta) * l2sq *
          std::log(2.0 * l1 * l1 / l2sq) / log_n(window);

  VerificationReport rep;
  rep.theorem_id = "dual_l2";
  stamp_window(rep, window, nullptr);
  rep.param("points", static_cast<std::uint64_t>(B.points.size()));
  rep.param("delta", B.delta);
  rep.param("f_norm1", l1);
  rep.param("f_norm2_sq", l2sq);
  rep.lhs = lhs.value();
  rep.rhs = rhs;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.pass = rep.lhs <= rep.rhs;
  rep.elapsed_ms = tm.ms();
  return rep;
}

namespace {

// Constant family in front of the moment bounds: the shifted window pays a
// factor 2 and loses the refined (1 + 3/(2 log N))^h base.
double moment_constant(const PrimeWindow& w, double h) {
  if (w.M == 0)
    return 7000.0 * (std::pow(1.0 + 3.0 / (2.0 * log_n(w)), h) + 1.0 / h);
  return 14000.0 * (std::pow(2.0, h) + 1.0 / h);
}

}  // namespace

VerificationReport verify_moment_bound(const WellSpacedSet& X,
                                       const CoefficientSeq& coeffs, double h) {
  Timer tm;
  const auto& w = *coeffs.window;
  require_window(w, "moment_bound");
  if (!(h > 0.0)) throw UsageError("moment_bound: h must be > 0");
  if (X.points.empty()) throw UsageError("moment_bound: X must be non-empty");

  std::vector<double> abs_s(X.points.size());
  for (std::size_t i = 0; i < X.points.size(); ++i)
    abs_s[i] = std::abs(eval_sum(coeffs, X.points[i]));

  KahanSum lhs;
  for (double v : abs_s) lhs.add(std::pow(v, 2.0 + h));

  const double b_sq =
      (static_cast<double>(w.N) + 1.0 / X.delta) / log_n(w) * coeffs.norm2_sq;
  const double rhs = moment_constant(w, h) * std::pow(b_sq, 1.0 + h / 2.0);

  VerificationReport rep;
  rep.theorem_id = "moment_bound";
  stamp_window(rep, w, &coeffs);
  rep.param("points", static_cast<std::uint64_t>(X.points.size()));
  rep.param("delta", X.delta);
  rep.param("h", h);

  // Audit of the level-set slicing the proof rests on: members of
  // {|S| >= xi B} contribute at least xi B each, so Gamma >= xi B |X_xi|;
  // and with sum |u|^2 <= R (M = 0) the slice above c1 = min(5/4,
  // 1 + 3/(2 log N)) must be empty outright.
  const double B = std::sqrt(b_sq);
  if (B > 0.0) {
    const double c1 = std::min(1.25, 1.0 + 3.0 / (2.0 * log_n(w)));
    std::size_t biggest = 0;
    for (double xi : {c1, c1 / 2, c1 / 4}) {
      std::size_t members = 0;
      KahanSum gamma;
      for (double v : abs_s)
        if (v >= xi * B) {
          ++members;
          gamma.add(v);
        }
      biggest = std::max(biggest, members);
      if (gamma.value() < xi * B * static_cast<double>(members) * (1.0 - 1e-12))
        throw InternalCheckError("moment_bound: level-set mass below xi*B*count");
    }
    rep.param("levelset_max_members", static_cast<std::uint64_t>(biggest));
    if (w.M == 0 && coeffs.norm2_sq <= static_cast<double>(w.count()) * (1.0 + 1e-12)) {
      const double xi_hi = c1 * (1.0 + 1e-9);
      for (double v : abs_s)
        if (v >= xi_hi * B)
          throw InternalCheckError("moment_bound: level set above c1 not empty");
      rep.param("levelset_empty_above_c1", true);
    }
  }

  rep.lhs = lhs.value();
  rep.rhs = rhs;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.pass = rep.lhs <= rep.rhs;
  rep.elapsed_ms = tm.ms();
  return rep;
}

VerificationReport verify_integral_moment(const CoefficientSeq& coeffs, double h,
                                          std::uint32_t grid_factor) {
  Timer tm;
  const auto& w = *coeffs.window;
  require_window(w, "integral_moment");
  if (!(h > 0.0)) throw UsageError("integral_moment: h must be > 0");

  const MomentResult m = moment(coeffs, 2.0 + h, grid_factor);
  const double base = 2.0 * static_cast<double>(w.N) / log_n(w) * coeffs.norm2_sq;
  const double rhs =
      moment_constant(w, h) / static_cast<double>(w.N) * std::pow(base, 1.0 + h / 2.0);

  VerificationReport rep;
  rep.theorem_id = "integral_moment";
  stamp_window(rep, w, &coeffs);
  rep.param("h", h);
  rep.param("grid", m.grid_size);
  rep.param("refine_delta", m.refine_delta);
  rep.lhs = m.value;
  rep.rhs = rhs;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.pass = rep.lhs <= rep.rhs;
  rep.elapsed_ms = tm.ms();
  return rep;
}

VerificationReport verify_majorant(const CoefficientSeq& coeffs, double ell,
                                   std::uint32_t grid_factor) {
  Timer tm;
  const auto& w = *coeffs.window;
  if (!(ell >= 2.0)) throw UsageError("majorant: ell must be >= 2");
  if (w.N < 1'000'000)
    throw HypothesisError("majorant: hypothesis N >= 1e6 fails (N=" +
                          std::to_string(w.N) + ")");
  const auto R = static_cast<double>(w.count());
  if (coeffs.norm2_sq > R * (1.0 + 1e-12))
    throw HypothesisError("majorant: hypothesis sum |u_p|^2 <= count of primes fails");
  const bool shifted = w.M > 0;
  if (shifted && static_cast<double>(w.M) < std::sqrt(static_cast<double>(w.N)))
    throw HypothesisError("majorant: shifted window needs M >= sqrt(N)");

  const MomentResult num = moment(coeffs, ell, grid_factor);
  CoefficientSeq unit = gen_coeffs(CoeffModel{}, coeffs.window);
  const MomentResult den = moment(unit, ell, grid_factor);
  const double L = std::pow(num.value, 1.0 / ell);
  const double U = std::pow(den.value, 1.0 / ell);

  VerificationReport rep;
  rep.theorem_id = "majorant";
  stamp_window(rep, w, &coeffs);
  rep.param("ell", ell);
  rep.param("grid", num.grid_size);
  rep.param("refine_delta", num.refine_delta);
  rep.lhs = L;
  rep.rhs = U;
  rep.ratio = safe_ratio(L, U);
  if (!shifted) {
    rep.param("threshold", static_cast<std::int64_t>(100000));
    rep.pass = rep.ratio <= 1e5;
  } else {
    // Shifted windows carry no proved threshold: record the implied constant
    // against the sqrt((N/log N)/(1+R)) normalization and never judge it.
    const double scale = std::sqrt(static_cast<double>(w.N) / log_n(w) / (1.0 + R));
    rep.param("report_only", true);
    rep.param("implied_constant", U > 0.0 ? L / (U * scale) : 0.0);
    rep.pass = true;
  }
  rep.elapsed_ms = tm.ms();
  return rep;
}

VerificationReport verify_farey_maxarc(const CoefficientSeq& coeffs, std::uint64_t Q0,
                                       std::uint32_t samples_per_arc) {
  Timer tm;
  const auto& w = *coeffs.window;
  require_window(w, "farey_maxarc");
  if (samples_per_arc == 0) throw UsageError("farey_maxarc: need at least 1 sample per arc");
  if (Q0 < 2 || static_cast<double>(Q0) * static_cast<double>(Q0) > static_cast<double>(w.N))
    throw UsageError("farey_maxarc: Q0 out of range (need 2 <= Q0 <= sqrt(N))");

  const FareySystem F = farey(Q0);
  // One shared grid gives every arc its sample quota: the narrowest arc has
  // length 2/Q0^2, so K >= samples * Q0^2 / 2 keeps the step small enough.
  const std::uint64_t K = std::bit_ceil(std::max<std::uint64_t>(
      samples_per_arc * Q0 * Q0 / 2 + 1, 2));
  const auto grid = eval_on_grid(coeffs, K);

  KahanSum lhs;
  const auto Ki = static_cast<std::int64_t>(K);
  for (const auto& fr : F.fractions) {
    const auto a = static_cast<std::int64_t>(fr.a);
    const auto q = static_cast<std::int64_t>(fr.q);
    // k belongs to the arc iff |k q - a K| * Q0 <= K q * (1/q) = K, an exact
    // integer test; the valid k form one contiguous run around a K / q.
    const auto k0 = static_cast<std::int64_t>(
        std::llround(static_cast<double>(fr.a) * static_cast<double>(K) /
                     static_cast<double>(fr.q)));
    const auto inside = [&](std::int64_t k) {
      const std::int64_t dev = k * q - a * Ki;
      return (dev < 0 ? -dev : dev) * static_cast<std::int64_t>(Q0) <= Ki;
    };
    double best = -1.0;
    for (std::int64_t k = k0; inside(k); --k) {
      const double v = std::abs(grid[static_cast<std::size_t>(((k % Ki) + Ki) % Ki)]);
      best = std::max(best, v);
    }
    for (std::int64_t k = k0 + 1; inside(k); ++k) {
      const double v = std::abs(grid[static_cast<std::size_t>(((k % Ki) + Ki) % Ki)]);
      best = std::max(best, v);
    }
    if (best < 0.0)
      throw InternalCheckError("farey_maxarc: empty arc at " + std::to_string(fr.a) +
                               "/" + std::to_string(fr.q));
    lhs.add(best * best);
  }

  const double rhs = 1200.0 * static_cast<double>(w.N) *
                     std::log(static_cast<double>(Q0)) / log_n(w) * coeffs.norm2_sq;

  VerificationReport rep;
  rep.theorem_id = "farey_maxarc";
  stamp_window(rep, w, &coeffs);
  rep.param("Q0", Q0);
  rep.param("arcs", static_cast<std::uint64_t>(F.fractions.size()));
  rep.param("grid", K);
  rep.param("samples_per_arc", static_cast<std::uint64_t>(samples_per_arc));
  rep.lhs = lhs.value();
  rep.rhs = rhs;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.pass = rep.lhs <= rep.rhs;
  rep.elapsed_ms = tm.ms();
  return rep;
}

std::vector<VerificationReport> check_misc_lemmas() {
  std::vector<VerificationReport> out;

  // Chebyshev-range prime counting bounds, every integer up to 1e6.
  {
    Timer tm;
    constexpr std::uint64_t x_max = 1'000'000;
    const auto primes = primes_in(1, x_max);
    InequalityTally refined_upper, plain_upper, lower;
    std::size_t next = 0;
    std::uint64_t pi = 0;
    for (std::uint64_t x = 2; x <= x_max; ++x) {
      if (next < primes.size() && primes[next] == x) {
        ++pi;
        ++next;
      }
      const auto xd = static_cast<double>(x);
      const double lx = std::log(xd);
      const auto pid = static_cast<double>(pi);
      const std::string at = "x=" + std::to_string(x);
      if (x >= 114) {
        refined_upper.observe(pid, xd / lx * (1.0 + 3.0 / (2.0 * lx)), at);
        plain_upper.observe(pid, 5.0 * xd / (4.0 * lx), at);
      }
      if (x >= 17) lower.observe(xd / lx, pid, at);
    }
    VerificationReport rep;
    rep.theorem_id = "prime_count_bounds";
    refined_upper.fill(rep);
    rep.pass = rep.pass && plain_upper.violations == 0 && lower.violations == 0;
    rep.ratio = std::max({rep.ratio, plain_upper.worst_ratio, lower.worst_ratio});
    rep.param("plain_upper_min_slack", plain_upper.min_slack);
    rep.param("lower_min_slack", lower.min_slack);
    rep.param("plain_upper_violations", plain_upper.violations);
    rep.param("lower_violations", lower.violations);
    rep.elapsed_ms = tm.ms();
    out.push_back(std::move(rep));
  }

  // log_inversion: y / log y <= t with y >= 2, t >= e forces y <= 2 t log t.
  {
    Timer tm;
    InequalityTally tally;
    const double e = std::exp(1.0);
    for (int i = 0; i <= 400; ++i) {
      const double y = 2.0 * std::pow(5e5, i / 400.0);
      for (double factor : {1.0, 1.0 + 1e-6, 1.5, 3.0, 10.0, 100.0}) {
        const double t = std::max(e, factor * y / std::log(y));
        if (!(y >= 2.0) || !(t >= e) || !(y / std::log(y) <= t)) continue;
        tally.observe(y, 2.0 * t * std::log(t),
                      "y=" + format_double(y) + " t=" + format_double(t));
      }
    }
    VerificationReport rep;
    rep.theorem_id = "log_inversion";
    tally.fill(rep);
    rep.elapsed_ms = tm.ms();
    out.push_back(std::move(rep));
  }

  return out;
}

std::string canonical_theorem_id(const std::string& name) {
  std::string n;
  for (char ch : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (n == "wellspaced_l2" || n == "extensionprecise" || n == "extensionpreciseplus")
    return "wellspaced_l2";
  if (n == "dual_l2" || n == "bel" || n == "belplus") return "dual_l2";
  if (n == "moment_bound" || n == "extension" || n == "extensionplus")
    return "moment_bound";
  if (n == "integral_moment" || n == "maincor" || n == "maincorbis")
    return "integral_moment";
  if (n == "majorant" || n == "mainbourgain" || n == "mainbourgainplus")
    return "majorant";
  if (n == "farey_maxarc" || n == "extensionprecisebis" || n == "extensionprecisebisplus")
    return "farey_maxarc";
  std::string known;
  for (const auto& id : known_theorem_ids()) known += " " + id;
  throw UsageError("unknown theorem '" + name + "'; known:" + known);
}

std::vector<std::string> known_theorem_ids() {
  return {"wellspaced_l2", "dual_l2",  "moment_bound",
          "integral_moment", "majorant", "farey_maxarc"};
}

SweepSummary run_trials(const TrialSweepConfig& cfg) {
  const std::string theorem = canonical_theorem_id(cfg.theorem);
  if (cfg.trials < 0) throw UsageError("run_trials: trials must be >= 0");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
    throw UsageError("run_trials: need 1 <= n_min <= n_max");
  if (cfg.models.empty() || cfg.h_values.empty() || cfg.ell_values.empty() ||
      cfg.m_values.empty())
    throw UsageError("run_trials: empty cycle list");

  SweepSummary summary;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_seed = cfg.seed ^ static_cast<std::uint64_t>(trial);
    std::mt19937_64 rng(trial_seed);

    const std::uint64_t N =
        cfg.n_min + rng() % (cfg.n_max - cfg.n_min + 1);
    const std::uint64_t M = cfg.m_values[trial % cfg.m_values.size()];
    const CoeffKind kind = cfg.models[trial % cfg.models.size()];
    const double h = cfg.h_values[trial % cfg.h_values.size()];
    const double ell = cfg.ell_values[trial % cfg.ell_values.size()];

    auto window = PrimeWindow::make(M, N);
    CoeffModel model;
    model.kind = kind;
    model.seed = trial_seed;
    model.x0 = rng01(rng);
    model.density = 0.15 + 0.7 * rng01(rng);
    model.cap_l2_to_count = theorem == "majorant";
    const CoefficientSeq coeffs = gen_coeffs(model, window);

    const std::size_t points =
        2 + static_cast<std::size_t>(rng() % std::max<std::size_t>(cfg.max_points - 1, 1));

    VerificationReport rep;
    if (theorem == "wellspaced_l2") {
      rep = verify_well_spaced_l2(jittered_lattice(rng(), points), coeffs);
    } else if (theorem == "dual_l2") {
      const WellSpacedSet B = jittered_lattice(rng(), points);
      std::vector<std::complex<double>> f(B.points.size());
      switch (kind) {
        case CoeffKind::unit:
          std::fill(f.begin(), f.end(), std::complex<double>{1.0, 0.0});
          break;
        case CoeffKind::random_phase:
          for (auto& v : f) v = unit_phase(rng01(rng));
          break;
        case CoeffKind::concentrated: {
          // Align the dual sum at one window prime.
          const std::uint64_t p0 = window->primes.empty()
                                       ? 2
                                       : window->primes[rng() % window->primes.size()];
          for (std::size_t j = 0; j < f.size(); ++j)
            f[j] = std::conj(unit_phase_prod(static_cast<double>(p0), B.points[j]));
          break;
        }
        case CoeffKind::sparse:
          for (auto& v : f) v = rng01(rng) < model.density ? 1.0 : 0.0;
          break;
        case CoeffKind::random_complex:
          for (auto& v : f) v = {2.0 * rng01(rng) - 1.0, 2.0 * rng01(rng) - 1.0};
          break;
      }
      rep = verify_dual_l2(B, f, *window);
    } else if (theorem == "moment_bound") {
      rep = verify_moment_bound(jittered_lattice(rng(), points), coeffs, h);
    } else if (theorem == "integral_moment") {
      rep = verify_integral_moment(coeffs, h, cfg.grid_factor);
    } else if (theorem == "majorant") {
      rep = verify_majorant(coeffs, ell, cfg.grid_factor);
    } else if (theorem == "farey_maxarc") {
      const auto q_cap = static_cast<std::uint64_t>(
          std::sqrt(static_cast<double>(N)));
      std::uint64_t Q0 = cfg.q0;
      if (Q0 == 0) Q0 = 2 + rng() % std::max<std::uint64_t>(q_cap - 1, 1);
      rep = verify_farey_maxarc(coeffs, Q0, cfg.samples_per_arc);
    } else {
      throw UsageError("run_trials: unhandled theorem " + theorem);
    }

    rep.seed = trial_seed;
    rep.param("trial", trial);
    rep.param("model", coeff_kind_name(kind));
    if (!rep.pass) ++summary.failures;
    if (rep.find_param("report_only") == nullptr)
      summary.max_ratio = std::max(summary.max_ratio, rep.ratio);
    summary.reports.push_back(std::move(rep));
  }
  return summary;
}

}  // namespace envsieve
