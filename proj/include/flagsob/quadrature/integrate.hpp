#pragma once

#include "flagsob/error.hpp"
#include "flagsob/quadrature/rules.hpp"
#include "flagsob/quadrature/spec.hpp"
#include "flagsob/quadrature/stats.hpp"
#include "flagsob/rng.hpp"
#include "flagsob/spectra/log_gamma.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <concepts>
#include <numbers>
#include <sstream>
#include <span>
#include <vector>

namespace flagsob::quadrature {

template <class F>
concept ScalarIntegrand = std::invocable<const F&, std::span<const double>> &&
                          std::convertible_to<std::invoke_result_t<const F&, std::span<const double>>, double>;

/// f(x, out) writes one value per output slot.
template <class F>
concept MultiIntegrand = std::invocable<const F&, std::span<const double>, std::span<double>>;

/// Several integrals over one node set, with the covariance of the estimates
/// (zero for deterministic rules) so ratios and logs get delta-method errors.
struct MultiIntegral {
  std::vector<double> values;
  std::vector<double> cov;
  std::size_t nodes_used = 0;

  std::size_t size() const { return values.size(); }
  double covariance(std::size_t a, std::size_t b) const { return cov[a * values.size() + b]; }
  double std_error(std::size_t a) const { return std::sqrt(std::max(covariance(a, a), 0.0)); }

  double delta_std_error(std::span<const double> grad) const {
    double v = 0.0;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) v += grad[a] * grad[b] * covariance(a, b);
    return std::sqrt(std::max(v, 0.0));
  }

  IntegralResult result(std::size_t a) const { return {values[a], std_error(a), nodes_used}; }
};

namespace detail {

[[noreturn]] inline void throw_non_finite(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite integrand value at (";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  throw numeric_error(os.str());
}

inline void check_finite(std::span<const double> x, std::span<const double> v) {
  for (double e : v)
    if (!std::isfinite(e)) throw_non_finite(x);
}

/// Accumulates k outputs either as an equal-weight sample mean or as a
/// weighted rule. Weighted sums are shifted by the first node's value so a
/// constant integrand reproduces the constant exactly.
class Collector {
 public:
  Collector(std::size_t k, bool sampled) : k_(k), sampled_(sampled), acc_(k), shift_(k), sum_(k, 0.0), buf_(k) {}

  std::span<double> buffer() { return buf_; }

  void add(std::span<const double> x, double w) {
    check_finite(x, buf_);
    if (sampled_) {
      acc_.add(buf_);
    } else {
      if (n_ == 0) shift_ = buf_;
      for (std::size_t a = 0; a < k_; ++a) sum_[a] += w * (buf_[a] - shift_[a]);
    }
    ++n_;
  }

  MultiIntegral finish(double scale = 1.0) const {
    MultiIntegral r;
    r.nodes_used = n_;
    r.values.resize(k_);
    r.cov.assign(k_ * k_, 0.0);
    for (std::size_t a = 0; a < k_; ++a) {
      if (sampled_) {
        r.values[a] = scale * acc_.mean(a);
        for (std::size_t b = 0; b < k_; ++b) r.cov[a * k_ + b] = scale * scale * acc_.mean_cov(a, b);
      } else {
        r.values[a] = scale * (shift_[a] + sum_[a]);
      }
    }
    return r;
  }

 private:
  std::size_t k_;
  bool sampled_;
  std::size_t n_ = 0;
  MomentAccumulator acc_;
  std::vector<double> shift_, sum_, buf_;
};

template <class F>
auto as_multi(const F& f) {
  return [&f](std::span<const double> x, std::span<double> out) { out[0] = f(x); };
}

inline void unit_gaussian_direction(Rng& rng, std::span<double> x) {
  double r2 = 0.0;
  do {
    r2 = 0.0;
    for (double& e : x) {
      e = rng.normal();
      r2 += e * e;
    }
  } while (r2 == 0.0);
  const double r = std::sqrt(r2);
  for (double& e : x) e /= r;
}

// tanh-sinh on (0, pi/2) with the integrand given (sin, cos) of the angle.
// The upper half is reflected onto (0, pi/4) so cos stays accurate near pi/2.
template <class G>
double integrate_angle(const G& g, double tol = 1e-13) {
  boost::math::quadrature::tanh_sinh<double> ts(15);
  constexpr double q = std::numbers::pi / 4;
  const double lo = ts.integrate([&g](double th) { return g(std::sin(th), std::cos(th)); }, 0.0, q, tol);
  const double hi = ts.integrate([&g](double u) { return g(std::cos(u), std::sin(u)); }, 0.0, q, tol);
  return lo + hi;
}

}  // namespace detail

/// Calls visit(x, w) for every node of the rule on S^d (weights sum to 1).
/// Monte Carlo draws node i from Rng(seed, i) as a normalized Gaussian vector;
/// adaptive-radial on a sphere has no radial part and uses the product rule.
template <class Visit>
void visit_sphere(std::size_t d, const QuadratureSpec& spec, Visit&& visit) {
  if (d < 1) throw domain_error("integrate_sphere: d must be at least 1");
  switch (spec.kind) {
    case Kind::monte_carlo: {
      std::vector<double> x(d + 1);
      const double w = 1.0 / static_cast<double>(spec.size);
      for (std::size_t i = 0; i < spec.size; ++i) {
        Rng rng(spec.seed, i);
        detail::unit_gaussian_direction(rng, x);
        visit(std::span<const double>(x), w);
      }
      return;
    }
    case Kind::sphere_product_rule:
    case Kind::adaptive_radial: {
      const PointRule r = sphere_product_rule(d, spec.size);
      for (std::size_t i = 0; i < r.size(); ++i) visit(r.point(i), r.weights[i]);
      return;
    }
    case Kind::gauss_hermite: break;
  }
  throw structural_error("integrate_sphere: gauss-hermite is not a sphere rule");
}

template <MultiIntegrand F>
MultiIntegral integrate_sphere_multi(std::size_t d, std::size_t k, const F& f, const QuadratureSpec& spec) {
  detail::Collector c(k, spec.kind == Kind::monte_carlo);
  visit_sphere(d, spec, [&](std::span<const double> x, double w) {
    f(x, c.buffer());
    c.add(x, w);
  });
  return c.finish();
}

/// Integral of f over S^d against the normalized rotation-invariant measure.
template <ScalarIntegrand F>
IntegralResult integrate_sphere(std::size_t d, const F& f, const QuadratureSpec& spec) {
  return integrate_sphere_multi(d, 1, detail::as_multi(f), spec).result(0);
}

/// Calls visit(x, w) for the nodes of the standard Gaussian measure on R^k.
template <class Visit>
void visit_gauss(std::size_t k, const QuadratureSpec& spec, Visit&& visit) {
  if (k < 1) throw domain_error("integrate_gauss: k must be at least 1");
  switch (spec.kind) {
    case Kind::monte_carlo: {
      std::vector<double> x(k);
      const double w = 1.0 / static_cast<double>(spec.size);
      for (std::size_t i = 0; i < spec.size; ++i) {
        Rng rng(spec.seed, i);
        for (double& e : x) e = rng.normal();
        visit(std::span<const double>(x), w);
      }
      return;
    }
    case Kind::gauss_hermite: {
      const PointRule r = gauss_hermite_tensor(k, spec.size);
      for (std::size_t i = 0; i < r.size(); ++i) visit(r.point(i), r.weights[i]);
      return;
    }
    default: break;
  }
  throw structural_error("integrate_gauss: use monte-carlo or gauss-hermite");
}

template <MultiIntegrand F>
MultiIntegral integrate_gauss_multi(std::size_t k, std::size_t outputs, const F& f, const QuadratureSpec& spec) {
  detail::Collector c(outputs, spec.kind == Kind::monte_carlo);
  visit_gauss(k, spec, [&](std::span<const double> x, double w) {
    f(x, c.buffer());
    c.add(x, w);
  });
  return c.finish();
}

/// Integral of f against (2 pi)^{-k/2} exp(-|x|^2/2) dx.
template <ScalarIntegrand F>
IntegralResult integrate_gauss(std::size_t k, const F& f, const QuadratureSpec& spec) {
  return integrate_gauss_multi(k, 1, detail::as_multi(f), spec).result(0);
}

/// Integrals of f_a(x) (1 + |x|^2/n)^exponent dx over R^k.
///   adaptive-radial: x = sqrt(n) tan(theta) omega, tanh-sinh in theta and the
///     sphere product rule with `size` nodes per dimension in omega;
///   monte-carlo: importance sampling from the Student t density proportional
///     to the weight itself (nu = -2 exponent - k, scale sqrt(n / nu)).
template <MultiIntegrand F>
MultiIntegral integrate_weighted_rn_multi(std::size_t k, double n, double exponent, std::size_t outputs, const F& f,
                                          const QuadratureSpec& spec) {
  if (k < 1) throw domain_error("integrate_weighted_rn: k must be at least 1");
  if (!(n > 0.0)) throw domain_error("integrate_weighted_rn: n must be positive");
  const double kd = static_cast<double>(k);
  if (!(-2.0 * exponent > kd)) throw domain_error("integrate_weighted_rn: weight not integrable (need -2*exponent > k)");

  if (spec.kind == Kind::monte_carlo) {
    const double nu = -2.0 * exponent - kd;
    const double log_mass = 0.5 * kd * std::log(n * std::numbers::pi) + spectra::log_gamma(-exponent - 0.5 * kd) -
                            spectra::log_gamma(-exponent);
    detail::Collector c(outputs, true);
    std::vector<double> x(k);
    for (std::size_t i = 0; i < spec.size; ++i) {
      Rng rng(spec.seed, i);
      for (double& e : x) e = rng.normal();
      const double s = std::sqrt(n / rng.chi_square(nu));
      for (double& e : x) e *= s;
      f(std::span<const double>(x), c.buffer());
      c.add(x, 1.0);
    }
    return c.finish(std::exp(log_mass));
  }
  if (spec.kind != Kind::adaptive_radial)
    throw structural_error("integrate_weighted_rn: use adaptive-radial or monte-carlo");

  PointRule ang;
  if (k == 1) {
    ang.dim = 1;
    ang.points = {1.0, -1.0};
    ang.weights = {0.5, 0.5};
  } else {
    ang = sphere_product_rule(k - 1, spec.size);
  }
  const double area = 2.0 * std::pow(std::numbers::pi, 0.5 * kd) / std::tgamma(0.5 * kd);
  const double sn = std::sqrt(n);
  std::vector<double> x(k), buf(outputs);
  MultiIntegral r;
  r.values.resize(outputs);
  r.cov.assign(outputs * outputs, 0.0);
  for (std::size_t a = 0; a < outputs; ++a) {
    std::size_t evals = 0;
    auto g = [&](double s, double c) {
      // r^{k-1} (1 + r^2/n)^e dr with 1 + r^2/n = sec^2 and dr = sqrt(n) sec^2.
      const double rad = sn * s / c;
      const double wt = std::pow(sn * s, kd - 1.0) * std::pow(c, -kd - 1.0 - 2.0 * exponent) * sn;
      if (!(wt > 1e-280) || !std::isfinite(rad)) return 0.0;
      double avg = 0.0;
      for (std::size_t j = 0; j < ang.size(); ++j) {
        const auto w = ang.point(j);
        for (std::size_t i = 0; i < k; ++i) x[i] = rad * w[i];
        f(std::span<const double>(x), std::span<double>(buf));
        detail::check_finite(x, buf);
        avg += ang.weights[j] * buf[a];
        ++evals;
      }
      return avg * wt;
    };
    r.values[a] = area * detail::integrate_angle(g);
    r.nodes_used = std::max(r.nodes_used, evals);
  }
  return r;
}

template <ScalarIntegrand F>
IntegralResult integrate_weighted_rn(std::size_t k, double n, double exponent, const F& f, const QuadratureSpec& spec) {
  return integrate_weighted_rn_multi(k, n, exponent, 1, detail::as_multi(f), spec).result(0);
}

}  // namespace flagsob::quadrature
