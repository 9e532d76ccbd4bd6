#pragma once

#include "flagsob/gauss_limit/constants.hpp"
#include "flagsob/quadrature/integrate.hpp"

#include <boost/math/quadrature/sinh_sinh.hpp>

namespace flagsob::gauss_limit {

/// Parameters of I = int_{C^m} ((1 + (|u|^2 + |v|^2)/(2n))^2 + t^2/(4n^2))^{-N} dv.
struct RadialIntegralParams {
  double N = 1.0;
  int m = 1;
  double n = 1.0;
  double u_norm_sq = 0.0;
  double t = 0.0;

  double A() const { return 1.0 + u_norm_sq / (2.0 * n); }
  double C() const { return t * t / (4.0 * n * n); }
  double D() const { return C() / (A() * A()); }
  double beta() const { return 1.0 / std::sqrt(1.0 + D()); }

  void validate() const {
    if (m < 1) throw domain_error("RadialIntegralParams: m must be positive");
    if (!(n > 0.0)) throw domain_error("RadialIntegralParams: n must be positive");
    if (!(u_norm_sq >= 0.0) || !std::isfinite(t)) throw domain_error("RadialIntegralParams: invalid u or t");
    if (!(2.0 * N > m)) throw domain_error("RadialIntegralParams: divergent, need 2N > m");
  }
};

/// log int_0^inf (x^2 + 2 beta x + 1)^{-N} x^{p-1} dx, by sinh-sinh in log x
/// around the peak of the integrand.
inline double log_beta_integral(double N, double p, double beta) {
  if (!(2.0 * N > p && p > 0.0)) throw domain_error("log_beta_integral: need 0 < p < 2N");
  if (!(beta > -1.0 && beta <= 1.0)) throw domain_error("log_beta_integral: beta must lie in (-1, 1]");
  auto g = [&](double s) { return -N * std::log(std::exp(2.0 * s) + 2.0 * beta * std::exp(s) + 1.0) + p * s; };
  // Newton iterations for g'(s) = 0 starting from the beta = 1 peak.
  double s = std::log(p / (2.0 * N - p));
  for (int it = 0; it < 50; ++it) {
    const double x = std::exp(s), den = x * x + 2.0 * beta * x + 1.0;
    const double d1 = -N * (2.0 * x * x + 2.0 * beta * x) / den + p;
    const double num = 2.0 * x * x + 2.0 * beta * x;
    const double d2 = -N * ((4.0 * x * x + 2.0 * beta * x) * den - num * num) / (den * den);
    if (!(d2 < 0.0)) break;
    const double step = d1 / d2;
    s -= step;
    if (std::abs(step) < 1e-14) break;
  }
  const double x = std::exp(s), den = x * x + 2.0 * beta * x + 1.0;
  const double num = 2.0 * x * x + 2.0 * beta * x;
  const double curv = N * ((4.0 * x * x + 2.0 * beta * x) * den - num * num) / (den * den);
  const double width = 1.0 / std::sqrt(std::max(curv, 1e-300));
  const double g0 = g(s);
  boost::math::quadrature::sinh_sinh<double> integrator;
  const double v = integrator.integrate([&](double u) {
    const double e = g(s + width * u) - g0;
    return e < -745.0 ? 0.0 : std::exp(e);
  }, 1e-12);
  return g0 + std::log(width * v);
}

/// log of int_0^inf ((1+r^2)^2 + D)^{-N} r^{2p-1} dr.
inline double log_radial_factor(double N, double p, double D) {
  const double beta = 1.0 / std::sqrt(1.0 + D);
  return std::log(0.5) + (-N + 0.5 * p) * std::log1p(D) + log_beta_integral(N, p, beta);
}

struct RadialIntegral {
  double direct = 0.0;
  double direct_std_error = 0.0;
  double rewritten = 0.0;
};

/// log of the closed rewriting
///   (2n)^m A^{-2N+m} (2 pi^m/Gamma(m)) (1/2)(1+D)^{-N+m/2} int (x^2+2 beta x+1)^{-N} x^{m-1} dx.
inline double log_radial_integral_rewritten(const RadialIntegralParams& p) {
  p.validate();
  const double m = p.m;
  return m * std::log(2.0 * p.n) + (m - 2.0 * p.N) * std::log(p.A()) + std::log(2.0) + m * std::log(std::numbers::pi) -
         log_gamma(m) + log_radial_factor(p.N, m, p.D());
}

/// direct: the v-integral over R^{2m} by integrate_weighted_rn against
/// (1 + |v|^2/(2nA))^{-2N}, with the bounded ratio as integrand;
/// rewritten: the one-dimensional form above.
inline RadialIntegral radial_integral_I(const RadialIntegralParams& p, const quadrature::QuadratureSpec& spec) {
  p.validate();
  const double A = p.A(), D = p.D(), scale = 2.0 * p.n * A;
  const auto d = quadrature::integrate_weighted_rn(
      static_cast<std::size_t>(2 * p.m), scale, -2.0 * p.N,
      [&](std::span<const double> v) {
        double r2 = 0.0;
        for (double e : v) r2 += e * e;
        const double s = 1.0 + r2 / scale;
        return std::pow(1.0 + D / (s * s), -p.N);
      },
      spec);
  const double pref = std::pow(A, -2.0 * p.N);
  return {pref * d.value, pref * d.std_error, std::exp(log_radial_integral_rewritten(p))};
}

/// Marginal densities on C^k x R after integrating out v in C^{n-k}:
///   nu_n = c'_n int Q^{-n-1} dv,  rho_n = (c'_n/4) int Q^{-n} dv,
///   rho~_n = (c'_n/4) int 4|v|^2 Q^{-n} dv.
struct MarginalDensities {
  double log_nu = 0.0;
  double log_rho = 0.0;
  double log_rho_tilde = 0.0;
};

inline MarginalDensities marginal_densities(int n, int k, double u_norm_sq, double t) {
  if (!(k >= 1 && n > k)) throw domain_error("marginal_densities: need n > k >= 1");
  const int m = n - k;
  const double lc = log_heisenberg_constant(n);
  RadialIntegralParams p{n + 1.0, m, static_cast<double>(n), u_norm_sq, t};
  MarginalDensities out;
  out.log_nu = lc + log_radial_integral_rewritten(p);
  p.N = n;
  out.log_rho = lc - std::log(4.0) + log_radial_integral_rewritten(p);
  // |v|^2 = 2nA r^2 raises the radial power by one.
  const double A = p.A(), D = p.D(), dm = m;
  out.log_rho_tilde = lc + dm * std::log(2.0 * n) + (dm - 2.0 * n) * std::log(A) + std::log(2.0) +
                      dm * std::log(std::numbers::pi) - log_gamma(dm) + std::log(2.0 * n * A) +
                      log_radial_factor(static_cast<double>(n), dm + 1.0, D);
  return out;
}

struct ExplorationRow {
  int n = 0;
  double u_norm_sq = 0.0;
  double t = 0.0;
  double gaussian = 0.0;    // (2 pi)^{-k} exp(-|u|^2/2) / sqrt(2 pi)
  double nu = 0.0;          // sqrt(n) nu_n(u, t)
  double rho = 0.0;         // sqrt(n) rho_n(u, t)
  double rho_tilde = 0.0;   // rho~_n(u, t) / sqrt(n)
  double nu_shape = 0.0;    // nu_n(u,t) / nu_n(0,0) / exp(-|u|^2/2)
  double rho_shape = 0.0;
  double rho_tilde_shape = 0.0;
};

/// Finite-n values of the three marginal measures against the Gaussian; the
/// scalings sqrt(n), sqrt(n), 1/sqrt(n) follow the 1/sqrt(n) and 8 sqrt(n)
/// weights of the limiting display. Recorded only.
inline std::vector<ExplorationRow> exploration_table(int k, const std::vector<int>& n_list,
                                                     const std::vector<double>& u_sq_grid,
                                                     const std::vector<double>& t_grid) {
  std::vector<ExplorationRow> rows;
  for (int n : n_list) {
    const MarginalDensities o = marginal_densities(n, k, 0.0, 0.0);
    const double sn = 0.5 * std::log(static_cast<double>(n));
    for (double u2 : u_sq_grid)
      for (double t : t_grid) {
        const MarginalDensities d = marginal_densities(n, k, u2, t);
        ExplorationRow r;
        r.n = n;
        r.u_norm_sq = u2;
        r.t = t;
        r.gaussian = std::exp(-k * std::log(2.0 * std::numbers::pi) - 0.5 * u2 - 0.5 * std::log(2.0 * std::numbers::pi));
        r.nu = std::exp(sn + d.log_nu);
        r.rho = std::exp(sn + d.log_rho);
        r.rho_tilde = std::exp(d.log_rho_tilde - sn);
        r.nu_shape = std::exp(d.log_nu - o.log_nu + 0.5 * u2);
        r.rho_shape = std::exp(d.log_rho - o.log_rho + 0.5 * u2);
        r.rho_tilde_shape = std::exp(d.log_rho_tilde - o.log_rho_tilde + 0.5 * u2);
        rows.push_back(r);
      }
  }
  return rows;
}

}  // namespace flagsob::gauss_limit
