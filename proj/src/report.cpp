#include "envsieve/report.hpp"

#include <cmath>
#include <cstdio>

namespace envsieve {

void VerificationReport::param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void VerificationReport::param(const std::string& key, const char* value) {
  parameters.emplace_back(key, std::string(value));
}

void VerificationReport::param(const std::string& key, double value) {
  parameters.emplace_back(key, format_double(value));
}

void VerificationReport::param(const std::string& key, std::int64_t value) {
  parameters.emplace_back(key, std::to_string(value));
}

void VerificationReport::param(const std::string& key, std::uint64_t value) {
  parameters.emplace_back(key, std::to_string(value));
}

void VerificationReport::param(const std::string& key, int value) {
  parameters.emplace_back(key, std::to_string(value));
}

void VerificationReport::param(const std::string& key, bool value) {
  parameters.emplace_back(key, value ? "true" : "false");
}

const std::string* VerificationReport::find_param(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return &v;
  return nullptr;
}

double safe_ratio(double lhs, double rhs) {
  if (rhs != 0.0) {
    const double r = lhs / rhs;
    if (std::isfinite(r)) return r;
    return r > 0 ? 9e99 : -9e99;
  }
  if (lhs == 0.0) return 0.0;
  return lhs > 0 ? 9e99 : 0.0;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void InequalityTally::observe(double bound, double quantity, const std::string& point) {
  ++instances;
  const double r = safe_ratio(bound, quantity);
  const double slack = quantity - bound;
  if (slack < min_slack) min_slack = slack;
  if (instances == 1 || r > worst_ratio) {
    worst_ratio = r;
    worst_lhs = bound;
    worst_rhs = quantity;
    worst_at = point;
  }
  if (bound > quantity) {
    if (violations == 0) first_violation = point;
    ++violations;
  }
}

void InequalityTally::fill(VerificationReport& rep) const {
  rep.lhs = worst_lhs;
  rep.rhs = worst_rhs;
  rep.ratio = instances ? std::max(worst_ratio, 0.0) : 0.0;
  rep.pass = violations == 0;
  rep.param("instances", instances);
  rep.param("violations", violations);
  if (instances) {
    rep.param("min_slack", min_slack);
    rep.param("worst_at", worst_at);
  }
  if (violations) rep.param("first_violation", first_violation);
}

namespace {

// params collapse to k=v;k=v, quoted and ""-escaped for CSV.
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

}  // namespace

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "theorem,params,lhs,rhs,ratio,pass,seed,elapsed_ms\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.parameters) {
      if (!params.empty()) params += ';';
      params += k + "=" + v;
    }
    out += r.theorem_id;
    out += ',';
    out += csv_quote(params);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.ratio);
    out += ',';
    out += r.pass ? "true" : "false";
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.elapsed_ms);
    out += '\n';
  }
  return out;
}

}  // namespace envsieve
