#pragma once

#include "flagsob/spectra/eigenvalues.hpp"

#include <json.hpp>

#include <limits>
#include <vector>

namespace flagsob::spectra {

/// One row of a serialized eigenvalue table.
struct SpectralRecord {
  CaseId case_id;
  KTypeLabel label;
  Rational param;
  Parameter kind = Parameter::nu;
  SpectralValue value;
  long long deltab = 0;
  Rational bound_margin;
};

inline nlohmann::json rational_json(const Rational& r) {
  return {{"num", exactpoly::numerator_string(r)}, {"den", exactpoly::denominator_string(r)}};
}

inline nlohmann::json to_json(const SpectralRecord& rec) {
  nlohmann::json j;
  j["case"] = std::string(to_string(rec.case_id.family));
  if (rec.case_id.family != Family::octonionic) j["n"] = rec.case_id.n;
  j["label"] = {rec.label.first, rec.label.second};
  j[rec.kind == Parameter::nu ? "nu" : "r"] = rational_json(rec.param);
  j["exact"] = rec.value.exact ? rational_json(*rec.value.exact) : nlohmann::json(nullptr);
  j["approx"] = rec.value.approx;
  j["source"] = std::string(to_string(rec.value.source));
  j["deltab"] = rec.deltab;
  j["bound_margin"] = rational_json(rec.bound_margin);
  return j;
}

/// Eigenvalue table at the case's special parameter for every label up to
/// `max_degree`.
inline std::vector<SpectralRecord> spectral_table(const CaseId& c, int max_degree) {
  std::vector<SpectralRecord> out;
  const Parameter kind = c.family == Family::octonionic ? Parameter::r : Parameter::nu;
  for (const auto& l : enumerate_ktypes(c, max_degree)) {
    SpectralRecord rec;
    rec.case_id = c;
    rec.label = l;
    rec.param = c.special_parameter();
    rec.kind = kind;
    try {
      rec.value = intertwiner_eigenvalue(c, l, rec.param, kind);
    } catch (const domain_error&) {
      rec.value = SpectralValue::from_double(std::numeric_limits<double>::quiet_NaN(), SpectralValue::Source::exact);
    }
    rec.deltab = deltab_eigenvalue(c, l);
    rec.bound_margin = theorem_bound_margin(c, l);
    out.push_back(std::move(rec));
  }
  return out;
}

inline nlohmann::json to_json(const std::vector<SpectralRecord>& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : table) arr.push_back(to_json(r));
  return arr;
}

}  // namespace flagsob::spectra
