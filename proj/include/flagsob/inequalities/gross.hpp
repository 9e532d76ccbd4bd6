#pragma once

#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/inequalities/log_sobolev.hpp"

#include <functional>
#include <optional>

namespace flagsob::inequalities {

/// A real function on R^k with an optional analytic gradient.
struct SmoothFunction {
  std::size_t dim = 0;
  std::function<double(std::span<const double>)> value;
  std::function<void(std::span<const double>, std::span<double>)> gradient;
  std::optional<int> polynomial_degree;

  static constexpr double difference_step = 1e-5;

  static SmoothFunction from_polynomial(const exactpoly::RationalPoly& p) {
    auto compiled = std::make_shared<exactpoly::CompiledPoly>(p);
    SmoothFunction f;
    f.dim = p.nvars();
    f.polynomial_degree = std::max(p.degree(), 0);
    f.value = [compiled](std::span<const double> x) { return compiled->value(x); };
    f.gradient = [compiled](std::span<const double> x, std::span<double> g) { compiled->value_and_gradient(x, g); };
    return f;
  }

  /// Value, and gradient by central differences when none is supplied.
  double evaluate(std::span<const double> x, std::span<double> grad) const {
    const double v = value(x);
    if (gradient) {
      gradient(x, grad);
      return v;
    }
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t i = 0; i < dim; ++i) {
      const double xi = y[i];
      y[i] = xi + difference_step;
      const double up = value(y);
      y[i] = xi - difference_step;
      const double down = value(y);
      y[i] = xi;
      grad[i] = (up - down) / (2.0 * difference_step);
    }
    return v;
  }
};

/// Normalized f on (R^k, gamma): lhs = int f^2 log|f|, rhs = int |grad f|^2.
inline InequalityReport gross_check(std::size_t k, const SmoothFunction& f, const QuadratureSpec& spec) {
  if (k == 0 || !f.value) throw structural_error("gross_check: empty function");
  if (f.dim != k) throw structural_error("gross_check: function dimension " + std::to_string(f.dim) + " is not " + std::to_string(k));
  std::vector<double> grad(f.dim);
  const MultiIntegral m = quadrature::integrate_gauss_multi(
      f.dim, 3,
      [&](std::span<const double> x, std::span<double> out) {
        const double v = std::abs(f.evaluate(x, grad));
        double g2 = 0.0;
        for (double g : grad) g2 += g * g;
        out[0] = entropy_density(v);
        out[1] = v * v;
        out[2] = g2;
      },
      spec);
  const double a = m.values[0], b = m.values[1], c = m.values[2];
  if (!(b > 0.0)) throw domain_error("gross_check: f vanishes");
  InequalityReport r;
  r.suite = "gross";
  r.case_name = "gauss";
  r.n = static_cast<int>(f.dim);
  r.seed = spec.seed;
  r.samples = spec.size;
  r.metadata["quadrature"] = spec;
  r.lhs = a / b - 0.5 * std::log(b);
  r.rhs = c / b;
  r.margin = r.rhs - r.lhs;
  const double g[3] = {-1.0 / b, (a - c) / (b * b) + 0.5 / b, 1.0 / b};
  r.std_error = m.delta_std_error(g);
  return r;
}

}  // namespace flagsob::inequalities
