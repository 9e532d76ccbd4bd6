#pragma once

#include "flagsob/inequalities/band_limited.hpp"
#include "flagsob/inequalities/report.hpp"
#include "flagsob/quadrature/integrate.hpp"

#include <map>

namespace flagsob::inequalities {

using quadrature::IntegralResult;
using quadrature::MultiIntegral;
using quadrature::QuadratureSpec;

/// |f|^2 log|f| with 0 log 0 = 0; |f| < 1e-300 contributes 0.
inline double entropy_density(double abs_f) { return abs_f < 1e-300 ? 0.0 : abs_f * abs_f * std::log(abs_f); }

enum class EntropyForm {
  plain,   // int |f|^2 log|f|
  general  // int |f|^2 log|f| - ||f||_2^2 log ||f||_2
};

enum class DirichletSource { geometric, spectral };

namespace detail {

inline double horizontal_sq(const CaseId& c, std::span<const double> x, const Jet& j) {
  if (c.family == Family::real) {
    double s = 0.0, r1 = 0.0, r2 = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      s += j.grad_re[a] * j.grad_re[a] + j.grad_im[a] * j.grad_im[a];
      r1 += j.grad_re[a] * x[a];
      r2 += j.grad_im[a] * x[a];
    }
    return std::max(0.0, s - r1 * r1 - r2 * r2);
  }
  const geometry::SpherePoint xi(std::vector<double>(x.begin(), x.end()));
  const auto vert = geometry::vertical_basis(c, xi);
  return geometry::horizontal_norm_sq(j.grad_re, xi, vert) + geometry::horizontal_norm_sq(j.grad_im, xi, vert);
}

// Per point: |f|^2 log|f|, |f|^2, |grad_b f|^2.
inline MultiIntegral sphere_triple(const BandLimitedFunction& f, const QuadratureSpec& spec, bool with_gradient) {
  const CaseId c = f.case_id();
  Jet jet;
  return quadrature::integrate_sphere_multi(
      f.sphere_dim(), 3,
      [&](std::span<const double> x, std::span<double> out) {
        if (with_gradient) {
          f.jet(x, jet);
          out[2] = horizontal_sq(c, x, jet);
        } else {
          jet.value = f.value(x);
          out[2] = 0.0;
        }
        const double a = std::abs(jet.value);
        out[0] = entropy_density(a);
        out[1] = a * a;
      },
      spec);
}

inline double half_b_log_b(double b) { return b > 0.0 ? 0.5 * b * std::log(b) : 0.0; }

inline InequalityReport make_report(std::string suite, const BandLimitedFunction& f, const QuadratureSpec& spec) {
  InequalityReport r;
  r.suite = std::move(suite);
  r.case_name = std::string(spectra::to_string(f.case_id().family));
  r.n = f.case_id().n;
  r.seed = spec.seed;
  r.samples = spec.size;
  r.metadata["quadrature"] = spec;
  r.metadata["max_degree"] = f.max_degree();
  return r;
}

}  // namespace detail

/// Entropy of F on its sphere with the normalized measure.
inline IntegralResult entropy_functional(const BandLimitedFunction& f, const QuadratureSpec& spec,
                                         EntropyForm form = EntropyForm::general) {
  const MultiIntegral m = detail::sphere_triple(f, spec, false);
  if (form == EntropyForm::plain) return m.result(0);
  const double b = m.values[1];
  const double grad[3] = {1.0, b > 0 ? -0.5 * (std::log(b) + 1.0) : 0.0, 0.0};
  return {m.values[0] - detail::half_b_log_b(b), m.delta_std_error(grad), m.nodes_used};
}

/// int_S |grad_b F|^2 by quadrature of the projected ambient gradient.
inline IntegralResult dirichlet_form_geometric(const BandLimitedFunction& f, const QuadratureSpec& spec) {
  return detail::sphere_triple(f, spec, true).result(2);
}

/// sum over components of Delta_b(label) * ||component||^2.
inline double dirichlet_form_spectral(const BandLimitedFunction& f) {
  double s = 0.0;
  for (const auto& c : f.components()) {
    if (!c.label) throw domain_error("dirichlet_form_spectral: component of degree " + std::to_string(c.degree) +
                                    " has no K-type label in the " + f.case_id().name() + " case");
    s += static_cast<double>(spectra::deltab_eigenvalue(f.case_id(), *c.label)) * c.weight * c.weight * c.norm_sq;
  }
  return s;
}

/// lhs = int |F|^2 log|F|, rhs = C int |grad_b F|^2 + ||F||^2 log ||F||.
inline InequalityReport verify_theorem21(const BandLimitedFunction& f, const QuadratureSpec& spec,
                                         DirichletSource source = DirichletSource::geometric) {
  const double C = exactpoly::to_double(f.case_id().sharp_constant());
  const bool geometric = source == DirichletSource::geometric;
  const MultiIntegral m = detail::sphere_triple(f, spec, geometric);
  const double a = m.values[0], b = m.values[1];
  const double dirichlet = geometric ? m.values[2] : dirichlet_form_spectral(f);
  if (!(b > 0.0)) throw domain_error("verify_theorem21: f vanishes");
  auto r = detail::make_report("theorem21", f, spec);
  r.lhs = a;
  r.rhs = C * dirichlet + detail::half_b_log_b(b);
  r.margin = r.rhs - r.lhs;
  const double grad[3] = {-1.0, 0.5 * (std::log(b) + 1.0), geometric ? C : 0.0};
  r.std_error = m.delta_std_error(grad);
  r.metadata["dirichlet"] = dirichlet;
  r.metadata["dirichlet_source"] = geometric ? "geometric" : "spectral";
  r.metadata["constant"] = C;
  return r;
}

/// Normalized F = sum Y_k: lhs = int |F|^2 log|F|, rhs = sum k ||Y_k||^2.
inline InequalityReport beckner_bound_check(const BandLimitedFunction& f, const QuadratureSpec& spec) {
  const BandLimitedFunction F = f.normalized();
  const MultiIntegral m = detail::sphere_triple(F, spec, false);
  const double b = m.values[1];
  auto r = detail::make_report("beckner", F, spec);
  r.lhs = m.values[0] - detail::half_b_log_b(b);
  r.rhs = 0.0;
  for (const auto& c : F.components()) r.rhs += c.degree * c.weight * c.weight * c.norm_sq;
  r.margin = r.rhs - r.lhs;
  const double grad[3] = {-1.0, 0.5 * (std::log(b) + 1.0), 0.0};
  r.std_error = m.delta_std_error(grad);
  return r;
}

/// Normalized F: lhs = int |F|^2 log|F|, rhs = (B F, F) with B = C * lambda(label).
inline InequalityReport sobolev_generator_check(const std::map<KTypeLabel, double>& spectrum, double C,
                                                const BandLimitedFunction& f, const QuadratureSpec& spec) {
  const BandLimitedFunction F = f.normalized();
  double form = 0.0;
  for (const auto& c : F.components()) {
    if (!c.label) throw domain_error("sobolev_generator_check: unlabeled component of degree " + std::to_string(c.degree));
    const auto it = spectrum.find(*c.label);
    if (it == spectrum.end())
      throw domain_error("sobolev_generator_check: no eigenvalue for label " + spectra::label_string(*c.label));
    form += C * it->second * c.weight * c.weight * c.norm_sq;
  }
  const MultiIntegral m = detail::sphere_triple(F, spec, false);
  const double b = m.values[1];
  auto r = detail::make_report("sobolev_generator", F, spec);
  r.lhs = m.values[0] - detail::half_b_log_b(b);
  r.rhs = form;
  r.margin = r.rhs - r.lhs;
  const double grad[3] = {-1.0, 0.5 * (std::log(b) + 1.0), 0.0};
  r.std_error = m.delta_std_error(grad);
  return r;
}

/// The Delta_b spectrum of a case as a label map, up to max_degree.
inline std::map<KTypeLabel, double> deltab_spectrum(const CaseId& c, int max_degree) {
  std::map<KTypeLabel, double> s;
  for (const auto& l : spectra::enumerate_ktypes(c, max_degree))
    s[l] = static_cast<double>(spectra::deltab_eigenvalue(c, l));
  return s;
}

/// exp(-t Delta_b) F, componentwise.
inline BandLimitedFunction heat_semigroup(const BandLimitedFunction& f, double t) {
  if (t < 0.0) throw domain_error("heat_semigroup: t must be nonnegative");
  return f.with_multiplier([&](const Component& c) {
    if (!c.label) throw domain_error("heat_semigroup: component of degree " + std::to_string(c.degree) + " has no label");
    return std::exp(-t * static_cast<double>(spectra::deltab_eigenvalue(f.case_id(), *c.label)));
  });
}

/// Smallest t with exp(-t/C) <= sqrt((q-1)/(p-1)).
inline double contraction_threshold(const CaseId& c, double q, double p) {
  if (!(q > 1.0 && p >= q)) throw domain_error("contraction_threshold: need 1 < q <= p");
  return exactpoly::to_double(c.sharp_constant()) * 0.5 * std::log((p - 1.0) / (q - 1.0));
}

namespace detail {

// lhs = ||G||_p, rhs = ||F||_q from one node set.
inline void norm_comparison(InequalityReport& r, const BandLimitedFunction& G, double p, const BandLimitedFunction& F,
                            double q, const QuadratureSpec& spec) {
  const MultiIntegral m = quadrature::integrate_sphere_multi(
      F.sphere_dim(), 2,
      [&](std::span<const double> x, std::span<double> out) {
        out[0] = std::pow(std::abs(G.value(x)), p);
        out[1] = std::pow(std::abs(F.value(x)), q);
      },
      spec);
  r.lhs = std::pow(m.values[0], 1.0 / p);
  r.rhs = std::pow(m.values[1], 1.0 / q);
  r.margin = r.rhs - r.lhs;
  const double grad[2] = {m.values[0] > 0 ? -r.lhs / (p * m.values[0]) : 0.0,
                          m.values[1] > 0 ? r.rhs / (q * m.values[1]) : 0.0};
  r.std_error = m.delta_std_error(grad);
}

}  // namespace detail

/// ||L^p norm of F|| by quadrature of |F|^p.
inline IntegralResult lp_norm(const BandLimitedFunction& f, double p, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw domain_error("lp_norm: p must be positive");
  const IntegralResult m =
      quadrature::integrate_sphere(f.sphere_dim(), [&](std::span<const double> x) { return std::pow(std::abs(f.value(x)), p); }, spec);
  const double v = std::pow(m.value, 1.0 / p);
  return {v, m.value > 0 ? v / (p * m.value) * m.std_error : 0.0, m.nodes_used};
}

/// lhs = ||exp(-t Delta_b) F||_p, rhs = ||F||_q.
inline InequalityReport semigroup_contraction_check(const BandLimitedFunction& f, double t, double q, double p,
                                                    const QuadratureSpec& spec) {
  if (!(q > 1.0 && p >= q)) throw domain_error("semigroup_contraction_check: need 1 < q <= p");
  const CaseId c = f.case_id();
  const double C = exactpoly::to_double(c.sharp_constant());
  auto r = detail::make_report("semigroup", f, spec);
  detail::norm_comparison(r, heat_semigroup(f, t), p, f, q, spec);
  r.metadata["t"] = t;
  r.metadata["p"] = p;
  r.metadata["q"] = q;
  r.metadata["threshold"] = contraction_threshold(c, q, p);
  r.metadata["time_condition"] = std::exp(-t / C) <= std::sqrt((q - 1.0) / (p - 1.0));
  return r;
}

}  // namespace flagsob::inequalities
