#pragma once

#include "flagsob/inequalities/log_sobolev.hpp"
#include "flagsob/spectra/log_gamma.hpp"

#include <algorithm>
#include <functional>

namespace flagsob::inequalities {

namespace detail {

inline void check_hls_exponent(int n, double p, const char* who) {
  if (n < 1) throw domain_error(std::string(who) + ": n must be positive");
  if (!(p > 1.0 && p < 2.0)) throw domain_error(std::string(who) + ": p must lie in (1, 2)");
}

}  // namespace detail

/// gamma_k = Gamma(n/p) Gamma(n/p' + k) / (Gamma(n/p') Gamma(n/p + k)).
inline double gamma_k(int n, double p, int k) {
  detail::check_hls_exponent(n, p, "gamma_k");
  if (k < 0) throw domain_error("gamma_k: k must be nonnegative");
  if (k == 0) return 1.0;
  const double a = n / p, b = n * (1.0 - 1.0 / p);
  using spectra::log_gamma;
  return std::exp(log_gamma(a) + log_gamma(b + k) - log_gamma(b) - log_gamma(a + k));
}

/// K_p = pi^{n/p'} Gamma(n/p - n/2)/Gamma(n/p) (Gamma(n/2)/Gamma(n))^{(p-2)/p}.
inline double hls_constant(int n, double p) {
  detail::check_hls_exponent(n, p, "hls_constant");
  const double a = n / p, b = n * (1.0 - 1.0 / p);
  if (!(a - 0.5 * n > 0.0)) throw domain_error("hls_constant: Gamma(n/p - n/2) has a pole");
  using spectra::log_gamma;
  return std::exp(b * std::log(std::numbers::pi) + log_gamma(a - 0.5 * n) - log_gamma(a) +
                  (p - 2.0) / p * (log_gamma(0.5 * n) - log_gamma(static_cast<double>(n))));
}

/// The normalized intertwining operator (I1 = 1) on S^n: Y_k -> gamma_k Y_k.
inline BandLimitedFunction intertwiner_multiplier_apply(const BandLimitedFunction& f, double p) {
  if (f.case_id().family != Family::real) throw domain_error("intertwiner_multiplier_apply: real case only");
  const int n = f.case_id().n;
  return f.with_multiplier([&](const Component& c) { return gamma_k(n, p, c.degree); });
}

/// lhs = ||I F||_{p'}, rhs = ||F||_p.
inline InequalityReport hls_contraction_check(const BandLimitedFunction& f, double p, const QuadratureSpec& spec) {
  const double pd = p / (p - 1.0);
  auto r = detail::make_report("hls", f, spec);
  detail::norm_comparison(r, intertwiner_multiplier_apply(f, p), pd, f, p, spec);
  r.metadata["p"] = p;
  return r;
}

struct Rearrangement {
  double Q = 0.0;
  double Q_star = 0.0;
};

/// Q = sum a_i b_i and Q* after sorting both sequences decreasingly.
inline Rearrangement rearrangement_check(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw domain_error("rearrangement_check: sequences differ in length");
  auto nonneg = [](double v) { return v >= 0.0; };
  if (!std::all_of(a.begin(), a.end(), nonneg) || !std::all_of(b.begin(), b.end(), nonneg))
    throw domain_error("rearrangement_check: entries must be nonnegative");
  std::vector<double> as(a.begin(), a.end()), bs(b.begin(), b.end());
  std::sort(as.begin(), as.end(), std::greater<>());
  std::sort(bs.begin(), bs.end(), std::greater<>());
  Rearrangement r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.Q += a[i] * b[i];
    r.Q_star += as[i] * bs[i];
  }
  return r;
}

}  // namespace flagsob::inequalities
