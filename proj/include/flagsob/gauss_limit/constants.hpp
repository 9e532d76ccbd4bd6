#pragma once

#include "flagsob/error.hpp"
#include "flagsob/spectra/log_gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace flagsob::gauss_limit {

using spectra::log_gamma;

/// int_{R^m} (1 + (|x|^2 + |y|^2)/n)^{-N} dy
///   = (n pi)^{m/2} Gamma(N - m/2)/Gamma(N) (1 + |x|^2/n)^{-N + m/2}.
inline double lemma_closed_form(int m, double N, double n, double x_norm_sq) {
  if (m < 1) throw domain_error("lemma_closed_form: m must be positive");
  if (!(2.0 * N > m)) throw domain_error("lemma_closed_form: need 2N > m");
  if (!(n > 0.0)) throw domain_error("lemma_closed_form: n must be positive");
  if (!(x_norm_sq >= 0.0)) throw domain_error("lemma_closed_form: |x|^2 must be nonnegative");
  const double h = 0.5 * m;
  return std::exp(h * std::log(n * std::numbers::pi) + log_gamma(N - h) - log_gamma(N) +
                  (h - N) * std::log1p(x_norm_sq / n));
}

/// log c'_n = log of n^{-n/2} pi^{-n/2} Gamma(n)/Gamma(n/2).
inline double log_c_prime(int n) {
  if (n < 1) throw domain_error("c'_n: n must be positive");
  const double d = n;
  return -0.5 * d * std::log(d * std::numbers::pi) + log_gamma(d) - log_gamma(0.5 * d);
}

/// The constants of the projected real-case inequality, stored as logs.
/// The tilde constants need n > 2 and n + k > 4; otherwise has_tilde is false.
struct LimitConstants {
  int n = 0;
  int k = 0;
  double log_c_prime = 0.0;
  double log_d = 0.0;
  double log_d_prime = 0.0;
  bool has_tilde = false;
  double log_d_tilde = std::numeric_limits<double>::quiet_NaN();
  double log_d_tilde_prime = std::numeric_limits<double>::quiet_NaN();

  double c_prime() const { return std::exp(log_c_prime); }
  double d() const { return std::exp(log_d); }
  double d_prime() const { return std::exp(log_d_prime); }
  double d_tilde() const { return tilde(log_d_tilde); }
  double d_tilde_prime() const { return tilde(log_d_tilde_prime); }

 private:
  double tilde(double v) const {
    if (!has_tilde) throw domain_error("LimitConstants: tilde constants need n > 2 and n + k > 4");
    return std::exp(v);
  }
};

inline LimitConstants limit_constants(int n, int k) {
  if (!(k >= 1 && n > k)) throw domain_error("limit_constants: need n > k >= 1");
  const double dn = n, dk = k, hm = 0.5 * (n - k), lnp = std::log(dn * std::numbers::pi);
  LimitConstants c;
  c.n = n;
  c.k = k;
  c.log_c_prime = log_c_prime(n);
  c.log_d = hm * lnp + log_gamma(0.5 * (dn + dk)) - log_gamma(dn);
  c.log_d_prime = -0.5 * dk * lnp + log_gamma(0.5 * (dn + dk)) - log_gamma(0.5 * dn);
  if (n > 2 && n + k > 4) {
    c.has_tilde = true;
    c.log_d_tilde = hm * lnp + log_gamma(0.5 * (dn + dk) - 2.0) - log_gamma(dn - 2.0);
    c.log_d_tilde_prime = c.log_c_prime + c.log_d_tilde;
  }
  return c;
}

struct AsymptoticsRow {
  int n = 0;
  double d_prime_deviation = 0.0;        // d'_{n,k} (2 pi)^{k/2} - 1
  double d_tilde_prime_deviation = 0.0;  // (d~'_{n,k}/4) (2 pi)^{k/2} - 1
};

struct AsymptoticsTable {
  int k = 0;
  std::vector<AsymptoticsRow> rows;
  /// max |deviation| * n at the largest n.
  double envelope_constant = 0.0;
};

inline AsymptoticsTable asymptotics_check(int k, const std::vector<int>& n_list) {
  if (n_list.empty()) throw domain_error("asymptotics_check: empty n list");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) throw domain_error("asymptotics_check: n list must be increasing");
  AsymptoticsTable t;
  t.k = k;
  const double shift = 0.5 * k * std::log(2.0 * std::numbers::pi);
  for (int n : n_list) {
    const LimitConstants c = limit_constants(n, k);
    AsymptoticsRow r;
    r.n = n;
    r.d_prime_deviation = std::expm1(c.log_d_prime + shift);
    r.d_tilde_prime_deviation = c.has_tilde ? std::expm1(c.log_d_tilde_prime - std::log(4.0) + shift)
                                            : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back(r);
  }
  const auto& last = t.rows.back();
  t.envelope_constant =
      last.n * std::max(std::abs(last.d_prime_deviation), std::abs(last.d_tilde_prime_deviation));
  return t;
}

/// (1 + a/n)^{-n} - e^{-a}.
inline double compound_deviation(double a, double n) { return std::exp(-n * std::log1p(a / n)) - std::exp(-a); }

/// log of the Heisenberg normalization (2n)^{-n-1} pi^{-n-1/2} Gamma(2n+1)/Gamma(n+1/2).
inline double log_heisenberg_constant(int n) {
  if (n < 1) throw domain_error("heisenberg_constant: n must be positive");
  const double d = n;
  return -(d + 1.0) * std::log(2.0 * d) - (d + 0.5) * std::log(std::numbers::pi) + log_gamma(2.0 * d + 1.0) -
         log_gamma(d + 0.5);
}

inline double heisenberg_constant(int n) { return std::exp(log_heisenberg_constant(n)); }

}  // namespace flagsob::gauss_limit
