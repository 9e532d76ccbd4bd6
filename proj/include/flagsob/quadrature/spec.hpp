#pragma once

#include "flagsob/error.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace flagsob::quadrature {

enum class Kind { monte_carlo, sphere_product_rule, gauss_hermite, adaptive_radial };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::monte_carlo: return "monte-carlo";
    case Kind::sphere_product_rule: return "sphere-product-rule";
    case Kind::gauss_hermite: return "gauss-hermite";
    case Kind::adaptive_radial: return "adaptive-radial";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (Kind k : {Kind::monte_carlo, Kind::sphere_product_rule, Kind::gauss_hermite, Kind::adaptive_radial})
    if (s == to_string(k)) return k;
  throw structural_error("unknown quadrature kind '" + std::string(s) + "'");
}

/// Deterministic description of an integration rule. `size` is the sample
/// count for Monte Carlo and the per-dimension node count otherwise.
struct QuadratureSpec {
  Kind kind = Kind::monte_carlo;
  std::size_t size = 200000;
  std::uint64_t seed = 0;

  QuadratureSpec() = default;
  QuadratureSpec(Kind k, std::size_t n, std::uint64_t s = 0) : kind(k), size(n), seed(s) {
    if (size < 1) throw structural_error("QuadratureSpec: size must be at least 1");
  }

  static QuadratureSpec monte_carlo(std::size_t n, std::uint64_t seed) { return {Kind::monte_carlo, n, seed}; }

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

inline void to_json(nlohmann::json& j, const QuadratureSpec& s) {
  j = {{"kind", std::string(to_string(s.kind))}, {"size", s.size}, {"seed", s.seed}};
}

inline void from_json(const nlohmann::json& j, QuadratureSpec& s) {
  s = QuadratureSpec(parse_kind(j.at("kind").get<std::string>()), j.at("size").get<std::size_t>(),
                     j.value("seed", std::uint64_t{0}));
}

struct IntegralResult {
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic rules
  std::size_t nodes_used = 0;
};

}  // namespace flagsob::quadrature
