#pragma once

#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/gauss_limit/constants.hpp"
#include "flagsob/geometry/heisenberg.hpp"
#include "flagsob/inequalities/band_limited.hpp"
#include "flagsob/inequalities/log_sobolev.hpp"
#include "flagsob/quadrature/heisenberg_mu.hpp"

#include <functional>
#include <memory>

namespace flagsob::gauss_limit {

using exactpoly::ComplexPoly;
using exactpoly::Rational;
using inequalities::InequalityReport;
using quadrature::QuadratureSpec;

/// A function on C^n x R in real coordinates (x_1..x_n, y_1..y_n, t).
/// eval returns |f| and writes |grad_b f|^2 = sum_j |X_j f|^2 + |Y_j f|^2.
/// sample_exponent is the m of the measure Q^{-m} the integrals are taken
/// against (n + 1 is mu_n); the other factors are reweighted by powers of Q.
struct HeisenbergFunction {
  int n = 1;
  std::function<double(std::span<const double>, double&)> eval;
  double sample_exponent = 2.0;
  std::string description;
};

/// Homogeneous degree deg_z + 2 deg_t.
inline int heisenberg_homogeneous_degree(const ComplexPoly& f, int n) {
  int d = 0;
  for (const auto& [e, c] : f.terms()) {
    int h = 0;
    for (int i = 0; i < 2 * n; ++i) h += e[static_cast<std::size_t>(i)];
    d = std::max(d, h + 2 * e[static_cast<std::size_t>(2 * n)]);
  }
  return d;
}

/// Polynomial f with |grad_b f|^2 from the exact fields X_j, Y_j. Integrability
/// of |grad_b f|^2 against Q^{-n} needs homogeneous degree < n unless f is constant.
inline HeisenbergFunction heisenberg_polynomial(int n, const ComplexPoly& f) {
  const auto vars = geometry::heisenberg_vars(n);
  if (f.vars() != vars) throw structural_error("heisenberg_polynomial: expected variables (x, y, t)");
  const int dh = heisenberg_homogeneous_degree(f, n);
  if (dh > 0 && dh >= n)
    throw domain_error("heisenberg_polynomial: homogeneous degree " + std::to_string(dh) +
                       " makes |grad_b f|^2 non-integrable against mu_{n-1} for n = " + std::to_string(n) +
                       " (need degree < n)");
  const auto fields = geometry::heisenberg_fields(n);
  auto parts = std::make_shared<std::vector<exactpoly::CompiledComplexPoly>>();
  parts->emplace_back(f);
  auto lift = [](const exactpoly::FirstOrderOperator<Rational>& op) {
    std::vector<ComplexPoly> c;
    for (const auto& p : op.coefficients()) c.push_back(exactpoly::to_complex_poly(p));
    return exactpoly::FirstOrderOperator<exactpoly::ComplexRational>(std::move(c));
  };
  for (int j = 0; j < n; ++j) {
    parts->emplace_back(lift(fields.X[static_cast<std::size_t>(j)])(f));
    parts->emplace_back(lift(fields.Y[static_cast<std::size_t>(j)])(f));
  }
  HeisenbergFunction h;
  h.n = n;
  h.sample_exponent = dh == 0 || n == 1 ? n + 1.0 : static_cast<double>(n);
  h.description = "polynomial of homogeneous degree " + std::to_string(dh);
  h.eval = [parts](std::span<const double> v, double& grad_sq) {
    grad_sq = 0.0;
    for (std::size_t i = 1; i < parts->size(); ++i) grad_sq += std::norm((*parts)[i].value(v));
    return std::abs((*parts)[0].value(v));
  };
  return h;
}

/// f(z, t) = F(cr_cayley(z/sqrt(2n), t/(2n))) for F on S^{2n+1}; the horizontal
/// gradient is computed by the chain rule through the Cayley Jacobian.
inline HeisenbergFunction cayley_pullback(const inequalities::BandLimitedFunction& F) {
  if (F.case_id().family != spectra::Family::complex)
    throw domain_error("cayley_pullback: F must live on a complex-case sphere");
  const int n = F.case_id().n;
  auto shared = std::make_shared<inequalities::BandLimitedFunction>(F);
  HeisenbergFunction h;
  h.n = n;
  h.sample_exponent = n + 1.0;
  h.description = "Cayley pullback";
  h.eval = [shared, n](std::span<const double> v, double& grad_sq) {
    const double sz = 1.0 / std::sqrt(2.0 * n), st = 1.0 / (2.0 * n);
    std::vector<double> w(v.begin(), v.end());
    for (int i = 0; i < 2 * n; ++i) w[static_cast<std::size_t>(i)] *= sz;
    w.back() *= st;
    const auto p = geometry::HeisenbergPoint::from_real_coords(w);
    const auto xi = geometry::cr_cayley(p);
    const auto J = geometry::cr_cayley_jacobian(p);
    thread_local inequalities::Jet jet;
    shared->jet(xi.coords(), jet);
    grad_sq = 0.0;
    for (const auto* g : {&jet.grad_re, &jet.grad_im}) {
      std::vector<double> d(static_cast<std::size_t>(2 * n + 1), 0.0);
      for (std::size_t r = 0; r < J.size(); ++r)
        for (std::size_t c = 0; c < d.size(); ++c) d[c] += J[r][c] * (*g)[r];
      for (int i = 0; i < 2 * n; ++i) d[static_cast<std::size_t>(i)] *= sz;
      d.back() *= st;
      for (int j = 0; j < n; ++j) {
        const double x = v[static_cast<std::size_t>(j)], y = v[static_cast<std::size_t>(n + j)];
        const double X = d[static_cast<std::size_t>(j)] + 2.0 * y * d.back();
        const double Y = d[static_cast<std::size_t>(n + j)] - 2.0 * x * d.back();
        grad_sq += X * X + Y * Y;
      }
    }
    return std::abs(jet.value);
  };
  return h;
}

/// f normalized so c'_n int |f|^2 dmu_n = 1:
///   lhs = c'_n int |f|^2 log|f| dmu_n,  rhs = (c'_n/4) int |grad_b f|^2 dmu_{n-1},
/// with dmu_{n-1} = Q^{-n} dz dt in the variables of mu_n.
inline InequalityReport heisenberg_logsob_check(const HeisenbergFunction& f, const QuadratureSpec& spec) {
  const int n = f.n;
  const std::size_t nn = static_cast<std::size_t>(n);
  const double m = f.sample_exponent;
  const double e_mu = m - (n + 1.0), e_grad = m - n;
  const auto mi = quadrature::integrate_heisenberg_mu_multi(
      nn, 3,
      [&](std::span<const double> v, std::span<double> out) {
        const double q = quadrature::heisenberg_q(nn, v);
        if (!std::isfinite(q)) {
          std::fill(out.begin(), out.end(), 0.0);
          return;
        }
        double g2 = 0.0;
        const double a = f.eval(v, g2);
        const double wm = e_mu == 0.0 ? 1.0 : std::pow(q, e_mu), wg = e_grad == 0.0 ? 1.0 : std::pow(q, e_grad);
        out[0] = inequalities::entropy_density(a) * wm;
        out[1] = a * a * wm;
        out[2] = g2 == 0.0 ? 0.0 : g2 * wg;
      },
      spec, m);
  const double c = heisenberg_constant(n);
  const double A = c * mi.values[0], B = c * mi.values[1], G = 0.25 * c * mi.values[2];
  if (!(B > 0.0)) throw domain_error("heisenberg_logsob_check: f vanishes");
  InequalityReport r;
  r.suite = "heisenberg";
  r.case_name = "complex";
  r.n = n;
  r.label = f.description;
  r.seed = spec.seed;
  r.samples = spec.size;
  r.metadata["quadrature"] = spec;
  r.metadata["c_prime"] = c;
  r.metadata["mass"] = B;
  r.metadata["sample_exponent"] = m;
  r.lhs = A / B - 0.5 * std::log(B);
  r.rhs = G / B;
  r.margin = r.rhs - r.lhs;
  const double g[3] = {-c / B, c * ((A - G) / (B * B) + 0.5 / B), 0.25 * c / B};
  r.std_error = mi.delta_std_error(g);
  return r;
}

inline InequalityReport heisenberg_logsob_check(int n, const ComplexPoly& f, const QuadratureSpec& spec) {
  return heisenberg_logsob_check(heisenberg_polynomial(n, f), spec);
}

}  // namespace flagsob::gauss_limit
