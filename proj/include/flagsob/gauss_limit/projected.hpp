#pragma once

#include "flagsob/gauss_limit/constants.hpp"
#include "flagsob/inequalities/gross.hpp"
#include "flagsob/quadrature/integrate.hpp"

namespace flagsob::gauss_limit {

using inequalities::InequalityReport;
using inequalities::SmoothFunction;
using quadrature::QuadratureSpec;

/// f on R^k, normalized so d'_{n,k} int |f|^2 w = 1 with w = (1 + |x|^2/n)^{-(n+k)/2}:
///   lhs = d'_{n,k} int |f|^2 log|f| w,  rhs = (d~'_{n,k}/4) int |grad f|^2 w (1 + |x|^2/n)^2.
inline InequalityReport projected_inequality_check(std::size_t k, int n, const SmoothFunction& f,
                                                   const QuadratureSpec& spec) {
  if (!f.value || f.dim != k) throw structural_error("projected_inequality_check: function must depend on k variables");
  const int ki = static_cast<int>(k);
  const LimitConstants lc = limit_constants(n, ki);
  if (!lc.has_tilde) throw domain_error("projected_inequality_check: need n > 2 and n + k > 4");
  if (f.polynomial_degree && 2 * *f.polynomial_degree + 2 >= n)
    throw domain_error("projected_inequality_check: degree " + std::to_string(*f.polynomial_degree) +
                       " is not integrable for n = " + std::to_string(n) + " (need 2 deg + 2 < n)");
  const double dn = n;
  const double exponent = -0.5 * (dn + static_cast<double>(k));
  std::vector<double> grad(k);
  const auto m = quadrature::integrate_weighted_rn_multi(
      k, dn, exponent, 3,
      [&](std::span<const double> x, std::span<double> out) {
        const double v = std::abs(f.evaluate(x, grad));
        double g2 = 0.0, r2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
          g2 += grad[i] * grad[i];
          r2 += x[i] * x[i];
        }
        const double lift = 1.0 + r2 / dn;
        out[0] = inequalities::entropy_density(v);
        out[1] = v * v;
        out[2] = g2 * lift * lift;
      },
      spec);
  const double dp = lc.d_prime(), dt = 0.25 * lc.d_tilde_prime();
  const double a = dp * m.values[0], b = dp * m.values[1], c = dt * m.values[2];
  if (!(b > 0.0)) throw domain_error("projected_inequality_check: f vanishes");
  InequalityReport r;
  r.suite = "projected";
  r.case_name = "real";
  r.n = n;
  r.label = "k=" + std::to_string(k);
  r.seed = spec.seed;
  r.samples = spec.size;
  r.metadata["quadrature"] = spec;
  r.metadata["d_prime"] = dp;
  r.metadata["d_tilde_prime_over_4"] = dt;
  r.metadata["mass"] = b;
  r.lhs = a / b - 0.5 * std::log(b);
  r.rhs = c / b;
  r.margin = r.rhs - r.lhs;
  const double g[3] = {-dp / b, dp * ((a - c) / (b * b) + 0.5 / b), dt / b};
  r.std_error = m.delta_std_error(g);
  return r;
}

}  // namespace flagsob::gauss_limit
