#pragma once

#include "flagsob/quadrature/integrate.hpp"

namespace flagsob::quadrature {

/// Q(z, t) = (1 + |z|^2/(2n))^2 + t^2/(4n^2) for real coordinates (x, y, t).
inline double heisenberg_q(std::size_t n, std::span<const double> v) {
  const double dn = static_cast<double>(n);
  double z2 = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) z2 += v[i] * v[i];
  const double a = 1.0 + z2 / (2.0 * dn), s = v[2 * n] / (2.0 * dn);
  return a * a + s * s;
}

/// log of the total mass of Q^{-m} dz dt over C^n x R.
inline double heisenberg_log_mass(std::size_t n, double m) {
  const double dn = static_cast<double>(n);
  if (!(m > 0.5 * (dn + 1.0))) throw domain_error("integrate_heisenberg_mu: Q^{-m} needs m > (n+1)/2");
  return (dn + 1.0) * std::log(2.0 * dn) + dn * std::log(std::numbers::pi) + spectra::log_gamma(2.0 * m - 1.0 - dn) -
         spectra::log_gamma(2.0 * m - 1.0) + 0.5 * std::log(std::numbers::pi) + spectra::log_gamma(m - 0.5) -
         spectra::log_gamma(m);
}

/// Integrals of f_a against Q^{-m} dz dt on C^n x R; m = n + 1 is the measure
/// mu_n. Points are passed as real coordinates (x_1..x_n, y_1..y_n, t).
///   monte-carlo: exact sampling from the normalized measure. With z =
///     sqrt(2n) w and t = 2n s the density is ((1+|w|^2)^2 + s^2)^{-m}; w is a
///     multivariate t with 4m-2-2n degrees of freedom and s given w is
///     (1+|w|^2) times a t-variable with 2m-1 degrees of freedom.
///   adaptive-radial: |z| = sqrt(2n) tan(theta), t = 2n sec^2(theta) tan(phi),
///     tanh-sinh in both angles and the sphere product rule on S^{2n-1}.
template <MultiIntegrand F>
MultiIntegral integrate_heisenberg_mu_multi(std::size_t n, std::size_t outputs, const F& f, const QuadratureSpec& spec,
                                            double m) {
  if (n < 1) throw domain_error("integrate_heisenberg_mu: n must be at least 1");
  const double log_mass = heisenberg_log_mass(n, m);
  const double dn = static_cast<double>(n), s2n = std::sqrt(2.0 * dn);
  std::vector<double> v(2 * n + 1);

  if (spec.kind == Kind::monte_carlo) {
    const double nu_w = 4.0 * m - 2.0 - 2.0 * dn, nu_s = 2.0 * m - 1.0;
    detail::Collector c(outputs, true);
    for (std::size_t i = 0; i < spec.size; ++i) {
      Rng rng(spec.seed, i);
      double w2 = 0.0;
      const double sw = 1.0 / std::sqrt(rng.chi_square(nu_w));
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const double w = rng.normal() * sw;
        w2 += w * w;
        v[j] = s2n * w;
      }
      const double tau = rng.normal() / std::sqrt(rng.chi_square(nu_s));
      v[2 * n] = 2.0 * dn * (1.0 + w2) * tau;
      f(std::span<const double>(v), c.buffer());
      c.add(v, 1.0);
    }
    return c.finish(std::exp(log_mass));
  }
  if (spec.kind != Kind::adaptive_radial)
    throw structural_error("integrate_heisenberg_mu: use adaptive-radial or monte-carlo");

  const PointRule ang = sphere_product_rule(2 * n - 1, spec.size);
  const double area = 2.0 * std::pow(std::numbers::pi, dn) / std::tgamma(dn);
  std::vector<double> buf(outputs);
  MultiIntegral r;
  r.values.resize(outputs);
  r.cov.assign(outputs * outputs, 0.0);
  for (std::size_t a = 0; a < outputs; ++a) {
    std::size_t evals = 0;
    auto outer = [&](double st, double ct) {
      const double tn = st / ct, A = 1.0 / (ct * ct), rho = s2n * tn;
      const double outer_w = std::pow(rho, 2.0 * dn - 1.0) * s2n * std::pow(A, 2.0 - 2.0 * m);
      if (!(outer_w > 0.0) || !std::isfinite(outer_w) || !std::isfinite(A)) return 0.0;
      // integrand over t in (-inf, inf) folded onto phi in (0, pi/2): both signs
      auto inner = [&](double sp, double cp) {
        const double inner_w = std::pow(cp, 2.0 * m - 2.0) * 2.0 * dn;
        const double t = 2.0 * dn * A * sp / cp;
        if (!(inner_w > 0.0) || !std::isfinite(t)) return 0.0;
        double acc = 0.0;
        for (double sign : {1.0, -1.0}) {
          v[2 * n] = sign * t;
          double avg = 0.0;
          for (std::size_t j = 0; j < ang.size(); ++j) {
            const auto w = ang.point(j);
            for (std::size_t i = 0; i < 2 * n; ++i) v[i] = rho * w[i];
            f(std::span<const double>(v), std::span<double>(buf));
            detail::check_finite(v, buf);
            avg += ang.weights[j] * buf[a];
            ++evals;
          }
          acc += avg;
        }
        return acc * inner_w;
      };
      // Q^{-m} dt = A^{-2m} cos^{2m}(phi) 2n A sec^2(phi) dphi and
      // rho^{2n-1} d rho = rho^{2n-1} sqrt(2n) A d theta.
      return detail::integrate_angle(inner, 1e-12) * outer_w;
    };
    r.values[a] = area * detail::integrate_angle(outer, 1e-11);
    r.nodes_used = std::max(r.nodes_used, evals);
  }
  return r;
}

template <ScalarIntegrand F>
IntegralResult integrate_heisenberg_mu(std::size_t n, const F& f, const QuadratureSpec& spec, double m) {
  return integrate_heisenberg_mu_multi(n, 1, detail::as_multi(f), spec, m).result(0);
}

/// Integral of f against d mu_n = Q^{-n-1} dz dt.
template <ScalarIntegrand F>
IntegralResult integrate_heisenberg_mu(std::size_t n, const F& f, const QuadratureSpec& spec) {
  return integrate_heisenberg_mu(n, f, spec, static_cast<double>(n) + 1.0);
}

}  // namespace flagsob::quadrature
