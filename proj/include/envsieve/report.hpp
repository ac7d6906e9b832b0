#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace envsieve {

// One verification event: which statement, on what inputs, both sides of the
// inequality, and the verdict. Parameters keep insertion order so serialized
// output is deterministic for a fixed argv and seed.
struct VerificationReport {
  std::string theorem_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs/rhs with the 0/0 -> 0 convention
  bool pass = false;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, const char* value);
  void param(const std::string& key, double value);
  void param(const std::string& key, std::int64_t value);
  void param(const std::string& key, std::uint64_t value);
  void param(const std::string& key, int value);
  void param(const std::string& key, bool value);
  const std::string* find_param(const std::string& key) const;
};

// lhs/rhs kept finite for serialization: 0/0 -> 0, positive/0 -> 9e99.
double safe_ratio(double lhs, double rhs);

// Deterministic shortest-ish decimal form (%.17g round-trips doubles).
std::string format_double(double v);

// Running extremum over many instances of a one-sided inequality
// "bound <= quantity"; remembers the tightest instance for the report.
struct InequalityTally {
  double worst_ratio = -std::numeric_limits<double>::infinity();
  double min_slack = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  std::string worst_at;
  std::int64_t instances = 0;
  std::int64_t violations = 0;
  std::string first_violation;

  void observe(double bound, double quantity, const std::string& point);
  // Fills lhs/rhs/ratio/pass and the bookkeeping parameters of rep.
  void fill(VerificationReport& rep) const;
};

// Header + one row per report; columns match the JSON field order
// theorem,params,lhs,rhs,ratio,pass,seed,elapsed_ms.
std::string reports_csv(const std::vector<VerificationReport>& reports);

}  // namespace envsieve
