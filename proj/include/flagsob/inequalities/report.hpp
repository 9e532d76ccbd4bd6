#pragma once

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

namespace flagsob::inequalities {

/// One evaluated inequality lhs <= rhs with margin = rhs - lhs.
struct InequalityReport {
  std::string suite;
  std::string case_name;
  int n = 0;
  std::string label;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double std_error = 0.0;
  nlohmann::json metadata = nlohmann::json::object();

  /// margin >= -(sigmas * std_error + tolerance * max(1, |rhs|)).
  bool passes(double sigmas = 3.0, double tolerance = 0.0) const {
    return std::isfinite(margin) && margin >= -(sigmas * std_error + tolerance * std::max(1.0, std::abs(rhs)));
  }
};

inline void to_json(nlohmann::json& j, const InequalityReport& r) {
  j = {{"suite", r.suite}, {"case", r.case_name}, {"n", r.n},           {"label", r.label},
       {"seed", r.seed},   {"samples", r.samples}, {"lhs", r.lhs},      {"rhs", r.rhs},
       {"margin", r.margin}, {"std_error", r.std_error}, {"metadata", r.metadata}};
}

inline const char* csv_header() { return "suite,case,n,label,seed,lhs,rhs,margin,std_error,pass"; }

inline std::string csv_row(const InequalityReport& r, bool pass) {
  std::ostringstream os;
  os.precision(17);
  auto quoted = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  os << quoted(r.suite) << ',' << quoted(r.case_name) << ',' << r.n << ',' << quoted(r.label) << ',' << r.seed << ','
     << r.lhs << ',' << r.rhs << ',' << r.margin << ',' << r.std_error << ',' << (pass ? "true" : "false");
  return os.str();
}

}  // namespace flagsob::inequalities
