#pragma once

#include "flagsob/gauss_limit/constants.hpp"
#include "flagsob/gauss_limit/heisenberg_logsob.hpp"
#include "flagsob/gauss_limit/projected.hpp"
#include "flagsob/geometry/heisenberg.hpp"
#include "flagsob/inequalities/gross.hpp"
#include "flagsob/inequalities/hls.hpp"
#include "flagsob/inequalities/log_sobolev.hpp"
#include "flagsob/quadrature/heisenberg_mu.hpp"
#include "flagsob/spectra/eigenvalues.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace flagsob::acceptance {

using exactpoly::Rational;
using exactpoly::RationalPoly;
using inequalities::BandLimitedFunction;
using inequalities::InequalityReport;
using quadrature::Kind;
using quadrature::QuadratureSpec;
using spectra::CaseId;
using spectra::Family;
using spectra::KTypeLabel;

/// `scale` multiplies trial and sample counts; 1 is the full run.
struct AcceptanceConfig {
  std::uint64_t seed = 20240601;
  double scale = 1.0;

  std::size_t count(std::size_t full, std::size_t floor = 1) const {
    return std::max(floor, static_cast<std::size_t>(std::llround(static_cast<double>(full) * scale)));
  }
  std::uint64_t stream(int criterion, std::size_t trial) const {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(criterion))) + trial;
  }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool errored = false;
  std::string detail;
  double seconds = 0.0;
  std::size_t checks = 0;
  std::vector<double> margins;
  std::vector<InequalityReport> reports;
};

inline void to_json(nlohmann::json& j, const CriterionResult& r) {
  j = {{"id", r.id}, {"name", r.name}, {"pass", r.passed}, {"detail", r.detail}, {"checks", r.checks}};
  if (!r.margins.empty()) {
    std::vector<double> m = r.margins;
    std::sort(m.begin(), m.end());
    const std::size_t h = m.size() / 2;
    const double median = m.size() % 2 ? m[h] : 0.5 * (m[h - 1] + m[h]);
    j["margins"] = {{"count", m.size()}, {"min", m.front()}, {"median", median}};
  }
}

namespace detail {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

inline CriterionResult run(int id, std::string name, const std::function<void(CriterionResult&, Tally&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r, t);
    r.passed = t.failures() == 0;
    std::ostringstream os;
    os << t.checks() - t.failures() << "/" << t.checks() << " checks";
    if (!r.detail.empty()) os << "; " << r.detail;
    if (!t.first_failure().empty()) os << "; first failure: " << t.first_failure();
    r.detail = os.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.errored = true;
    r.detail = std::string("exception: ") + e.what();
  }
  r.checks = t.checks();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

inline std::vector<CaseId> spectral_cases() {
  std::vector<CaseId> cs;
  for (int n = 2; n <= 10; ++n) cs.push_back(CaseId::real(n));
  for (int n = 1; n <= 4; ++n) cs.push_back(CaseId::complex(n));
  for (int n = 1; n <= 3; ++n) cs.push_back(CaseId::quaternionic(n));
  cs.push_back(CaseId::octonionic());
  return cs;
}

// Equality sets of the spectral estimate, written out per family.
inline bool expected_equality(const CaseId& c, const KTypeLabel& l) {
  switch (c.family) {
    case Family::real: return l.first == 0 || l.first == 1;
    case Family::complex: return l.first * l.second == 0;
    default: return l.first == l.second;
  }
}

inline RationalPoly random_rational_poly(Rng& rng, const std::vector<std::string>& vars, int max_degree, int terms) {
  RationalPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    exactpoly::Exponent e(vars.size(), 0);
    for (auto d = rng.below(static_cast<std::uint64_t>(max_degree) + 1); d > 0; --d) ++e[rng.below(vars.size())];
    p.add_term(e, Rational(static_cast<long long>(rng.below(9)) - 4, 3));
  }
  return p;
}

// 1 + sum of random linear, square and cross terms with coefficients in [-1, 1].
inline RationalPoly random_gross_poly(Rng& rng, std::size_t k) {
  const auto v = exactpoly::coordinate_names(k);
  auto coef = [&](long long den) { return Rational(static_cast<long long>(rng.below(2001)) - 1000, 1000 * den); };
  RationalPoly p = RationalPoly::constant(v, Rational(1));
  for (std::size_t i = 0; i < k; ++i) {
    const auto xi = RationalPoly::variable(v, v[i]);
    p += xi * coef(1);
    p += xi * xi * coef(2);
    for (std::size_t j = i + 1; j < k; ++j) p += xi * RationalPoly::variable(v, v[j]) * coef(4);
  }
  return p;
}

}  // namespace detail

/// Exact special-parameter identities for all labels up to degree 100, and the
/// floating path against the exact value.
inline CriterionResult criterion1(const AcceptanceConfig& = {}) {
  return detail::run(1, "exact spectral identities", [](CriterionResult& r, detail::Tally& t) {
    std::size_t labels = 0, degenerate = 0;
    double worst = 0.0;
    for (const CaseId& c : detail::spectral_cases()) {
      const auto kind = c.family == Family::octonionic ? spectra::Parameter::r : spectra::Parameter::nu;
      for (const auto& l : spectra::enumerate_ktypes(c, 100)) {
        const auto id = spectra::special_nu_identity(c, l);
        ++labels;
        if (id.degenerate) {
          ++degenerate;
          continue;
        }
        t.check(id.holds(), c.name() + " " + spectra::label_string(l));
        const auto exact = spectra::intertwiner_eigenvalue(c, l, c.special_parameter(), kind);
        const auto approx =
            spectra::intertwiner_eigenvalue(c, l, exactpoly::to_double(c.special_parameter()), kind);
        const double e = exactpoly::to_double(*exact.exact), a = approx.approx;
        const double rel = std::abs(a - e) / std::max(1e-300, std::abs(e));
        worst = std::max(worst, rel);
        t.check(rel <= 1e-10, c.name() + " " + spectra::label_string(l) + " floating path off by " + detail::fmt(rel));
      }
    }
    r.detail = std::to_string(labels) + " labels, " + std::to_string(degenerate) +
               " degenerate (real n=2), worst floating relative error " + detail::fmt(worst);
  });
}

/// C lambda - k >= 0 exactly, with equality exactly on the equality set.
inline CriterionResult criterion2(const AcceptanceConfig& = {}) {
  return detail::run(2, "spectral bound and equality sets", [](CriterionResult& r, detail::Tally& t) {
    std::size_t labels = 0, equal = 0;
    for (const CaseId& c : detail::spectral_cases())
      for (const auto& l : spectra::enumerate_ktypes(c, 100)) {
        const Rational m = spectra::theorem_bound_margin(c, l);
        const bool eq = detail::expected_equality(c, l);
        ++labels;
        equal += eq;
        t.check(m >= 0, c.name() + " " + spectra::label_string(l) + " negative");
        t.check((m == 0) == eq, c.name() + " " + spectra::label_string(l) + " equality set mismatch");
        t.check(spectra::in_equality_set(c, l) == eq, c.name() + " " + spectra::label_string(l) + " in_equality_set");
      }
    r.detail = std::to_string(labels) + " labels, " + std::to_string(equal) + " on the equality set";
  });
}

/// The sphere log-Sobolev inequality on random band-limited functions by Monte Carlo, and equality
/// for constants.
inline CriterionResult criterion3(const AcceptanceConfig& cfg = {}) {
  return detail::run(3, "log-Sobolev inequality on random functions", [&](CriterionResult& r, detail::Tally& t) {
    const std::size_t trials = cfg.count(100), samples = cfg.count(200000, 1000);
    double worst_const = 0.0;
    for (const CaseId& c : {CaseId::real(2), CaseId::complex(1), CaseId::quaternionic(1), CaseId::octonionic()}) {
      for (double v : {1.0, 2.0, 0.3}) {
        const auto rep = inequalities::verify_theorem21(BandLimitedFunction::constant(c, v),
                                                        QuadratureSpec::monte_carlo(1000, cfg.seed));
        worst_const = std::max(worst_const, std::abs(rep.margin));
        t.check(std::abs(rep.margin) <= 1e-12, c.name() + " constant " + detail::fmt(v));
      }
      for (std::size_t i = 0; i < trials; ++i) {
        const auto f = inequalities::random_band_limited(c, 4, cfg.stream(3, i));
        auto rep = inequalities::verify_theorem21(f, QuadratureSpec::monte_carlo(samples, cfg.stream(30, i)));
        rep.label = "trial " + std::to_string(i);
        t.check(rep.passes(), c.name() + " trial " + std::to_string(i) + " margin " + detail::fmt(rep.margin));
        r.margins.push_back(rep.margin);
        r.reports.push_back(std::move(rep));
      }
    }
    r.detail = std::to_string(trials) + " trials x 4 cases, " + std::to_string(samples) +
               " samples; constants max |margin| " + detail::fmt(worst_const);
  });
}

/// Spectral against geometric Dirichlet forms on S^3 and S^5.
inline CriterionResult criterion4(const AcceptanceConfig& cfg = {}) {
  return detail::run(4, "spectral and geometric Dirichlet forms", [&](CriterionResult& r, detail::Tally& t) {
    const std::size_t trials = cfg.count(200, 40), samples = cfg.count(20000, 1000);
    std::size_t total = 0, agree = 0;
    for (const CaseId& c : {CaseId::complex(1), CaseId::complex(2)}) {
      std::size_t ok = 0;
      for (std::size_t i = 0; i < trials; ++i) {
        const auto f = inequalities::random_band_limited(c, 3, cfg.stream(4, i + 1000 * c.n));
        const auto g = inequalities::dirichlet_form_geometric(f, QuadratureSpec::monte_carlo(samples, cfg.stream(40, i)));
        const double s = inequalities::dirichlet_form_spectral(f);
        if (std::abs(g.value - s) <= 3.0 * g.std_error) ++ok;
      }
      t.check(static_cast<double>(ok) >= 0.95 * static_cast<double>(trials),
              c.name() + " agreement " + std::to_string(ok) + "/" + std::to_string(trials));
      total += trials;
      agree += ok;
    }
    r.detail = std::to_string(agree) + "/" + std::to_string(total) + " trials within 3 std errors";
  });
}

/// The y-integral lemma against adaptive quadrature.
inline CriterionResult criterion5(const AcceptanceConfig& = {}) {
  return detail::run(5, "lemma closed form", [](CriterionResult& r, detail::Tally& t) {
    double worst = 0.0;
    const QuadratureSpec spec{Kind::adaptive_radial, 3};
    for (int m = 1; m <= 3; ++m)
      for (double N = 0.5; N <= 6.0; N += 0.5) {
        if (2.0 * N <= m) continue;
        for (double n : {0.5, 1.0, 3.0, 10.0})
          for (double x2 : {0.0, 0.25, 1.0, 2.5, 4.0}) {
            const auto q = quadrature::integrate_weighted_rn(
                static_cast<std::size_t>(m), n, -N,
                [&](std::span<const double> y) {
                  double y2 = 0.0;
                  for (double e : y) y2 += e * e;
                  return std::pow(1.0 + x2 / (n + y2), -N);
                },
                spec);
            const double c = gauss_limit::lemma_closed_form(m, N, n, x2);
            const double res = std::abs(c - q.value) / (1.0 + std::abs(c));
            worst = std::max(worst, res);
            t.check(res <= 1e-8, "m=" + std::to_string(m) + " N=" + detail::fmt(N) + " n=" + detail::fmt(n) +
                                     " |x|^2=" + detail::fmt(x2));
          }
      }
    r.detail = "worst scaled residual " + detail::fmt(worst);
  });
}

/// Normalizations by quadrature and the n = 10^6 asymptotics.
inline CriterionResult criterion6(const AcceptanceConfig& = {}) {
  return detail::run(6, "limit constants and asymptotics", [](CriterionResult& r, detail::Tally& t) {
    const QuadratureSpec spec{Kind::adaptive_radial, 1};
    const auto one = [](std::span<const double>) { return 1.0; };
    double worst = 0.0;
    auto near_one = [&](double v, const std::string& what) {
      worst = std::max(worst, std::abs(v - 1.0));
      t.check(std::abs(v - 1.0) <= 5e-3, what + " = " + detail::fmt(v));
    };
    for (int n = 1; n <= 8; ++n) {
      const auto nn = static_cast<std::size_t>(n);
      near_one(std::exp(gauss_limit::log_c_prime(n)) * quadrature::integrate_weighted_rn(nn, n, -n, one, spec).value,
               "c'_" + std::to_string(n));
      near_one(gauss_limit::heisenberg_constant(n) * quadrature::integrate_heisenberg_mu(nn, one, spec).value,
               "Heisenberg c'_" + std::to_string(n));
      for (int k = 1; k <= 3 && k < n; ++k) {
        const auto c = gauss_limit::limit_constants(n, k);
        near_one(c.d_prime() *
                     quadrature::integrate_weighted_rn(static_cast<std::size_t>(k), n, -0.5 * (n + k), one, spec).value,
                 "d'_{" + std::to_string(n) + "," + std::to_string(k) + "}");
      }
    }
    double worst_dev = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const auto tab = gauss_limit::asymptotics_check(k, {1000000});
      const auto& row = tab.rows.back();
      for (double d : {row.d_prime_deviation, row.d_tilde_prime_deviation}) {
        worst_dev = std::max(worst_dev, std::abs(d));
        t.check(std::abs(d) <= 1e-4, "k=" + std::to_string(k) + " deviation " + detail::fmt(d));
      }
    }
    t.check(std::abs(gauss_limit::compound_deviation(1.0, 1e6)) <= 1e-6, "compound deviation");
    r.detail = "worst normalization error " + detail::fmt(worst) + ", worst deviation at n=1e6 " + detail::fmt(worst_dev);
  });
}

/// Gross inequality by Gauss-Hermite, and the projected inequality at n = 500.
inline CriterionResult criterion7(const AcceptanceConfig& cfg = {}) {
  return detail::run(7, "Gaussian log-Sobolev and its finite-n projection", [&](CriterionResult& r, detail::Tally& t) {
    const std::size_t trials = cfg.count(100);
    double worst = 1e300;
    for (std::size_t i = 0; i < trials; ++i) {
      Rng rng(cfg.stream(7, i), 0);
      const std::size_t k = 1 + i % 3;
      const auto p = detail::random_gross_poly(rng, k);
      auto rep = inequalities::gross_check(k, inequalities::SmoothFunction::from_polynomial(p),
                                           {Kind::gauss_hermite, k == 3 ? 24u : 40u});
      rep.label = "trial " + std::to_string(i);
      worst = std::min(worst, rep.margin);
      t.check(rep.margin >= -1e-6, "gross trial " + std::to_string(i) + " margin " + detail::fmt(rep.margin));
      r.margins.push_back(rep.margin);
      r.reports.push_back(std::move(rep));
    }
    const std::size_t projected = cfg.count(10, 2);
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < projected; ++i) {
      Rng rng(cfg.stream(70, i), 0);
      const std::size_t k = 1 + i % 2;
      const auto f = inequalities::SmoothFunction::from_polynomial(detail::random_gross_poly(rng, k));
      const auto g = inequalities::gross_check(k, f, {Kind::gauss_hermite, 60});
      const auto pr = gauss_limit::projected_inequality_check(k, 500, f, {Kind::adaptive_radial, 16});
      const double ratio = std::abs(pr.margin - g.margin) / g.rhs;
      worst_ratio = std::max(worst_ratio, ratio);
      t.check(ratio <= 0.05, "projected k=" + std::to_string(k) + " difference " + detail::fmt(ratio) + " of Dirichlet");
    }
    r.detail = "min Gross margin " + detail::fmt(worst) + ", worst projected/Gross gap " + detail::fmt(worst_ratio) +
               " of the Dirichlet term";
  });
}

/// Hypercontractivity on S^2 at the threshold time, and a violation below it.
inline CriterionResult criterion8(const AcceptanceConfig& cfg = {}) {
  return detail::run(8, "hypercontractivity at the threshold", [&](CriterionResult& r, detail::Tally& t) {
    const CaseId c = CaseId::real(2);
    const double q = 2.0, p = 4.0, ts = inequalities::contraction_threshold(c, q, p);
    t.check(std::abs(ts - 0.25 * std::log(3.0)) <= 1e-15, "threshold " + detail::fmt(ts));
    const std::size_t trials = cfg.count(50), samples = cfg.count(200000, 1000);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      const auto f = inequalities::random_band_limited(c, 4, cfg.stream(8, i));
      const QuadratureSpec spec = QuadratureSpec::monte_carlo(samples, cfg.stream(80, i));
      auto rep = inequalities::semigroup_contraction_check(f, ts, q, p, spec);
      rep.label = "trial " + std::to_string(i);
      t.check(rep.passes() && rep.metadata["time_condition"].get<bool>(),
              "trial " + std::to_string(i) + " margin " + detail::fmt(rep.margin));
      r.margins.push_back(rep.margin);
      r.reports.push_back(std::move(rep));
      for (double frac : {0.0, 0.25, 0.5}) {
        const auto below = inequalities::semigroup_contraction_check(f, frac * ts, q, p, spec);
        if (below.margin < -3.0 * below.std_error) ++violations;
      }
    }
    t.check(violations > 0, "no violation below the threshold");
    r.detail = "t* = log(3)/4, " + std::to_string(violations) + " sub-threshold violations";
  });
}

/// HLS multipliers, the rearrangement inequality, and the HLS contraction on S^3.
inline CriterionResult criterion9(const AcceptanceConfig& cfg = {}) {
  return detail::run(9, "HLS multipliers and rearrangement", [&](CriterionResult& r, detail::Tally& t) {
    for (int n = 1; n <= 8; ++n)
      for (double p : {1.1, 1.25, 1.5, 1.75, 1.9}) {
        t.check(inequalities::gamma_k(n, p, 0) == 1.0, "gamma_0");
        for (int k = 0; k < 100; ++k)
          t.check(inequalities::gamma_k(n, p, k + 1) < inequalities::gamma_k(n, p, k),
                  "gamma_k not decreasing at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    const std::size_t pairs = cfg.count(10000);
    std::size_t exhaustive = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      Rng rng(cfg.stream(9, i), 0);
      const std::size_t len = 1 + i % 12;
      std::vector<double> a(len), b(len);
      for (auto& e : a) e = static_cast<double>(rng.below(1001));
      for (auto& e : b) e = static_cast<double>(rng.below(1001));
      const auto re = inequalities::rearrangement_check(a, b);
      t.check(re.Q_star >= re.Q, "pair " + std::to_string(i));
      if (len <= 8) {
        std::vector<std::size_t> perm(len);
        std::iota(perm.begin(), perm.end(), 0);
        double best = 0.0;
        do {
          double s = 0.0;
          for (std::size_t j = 0; j < len; ++j) s += a[j] * b[perm[j]];
          best = std::max(best, s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        t.check(best == re.Q_star, "exhaustive maximum differs on pair " + std::to_string(i));
        ++exhaustive;
      }
    }
    const std::size_t trials = cfg.count(100), samples = cfg.count(200000, 1000);
    for (std::size_t i = 0; i < trials; ++i) {
      const auto f = inequalities::random_band_limited(CaseId::real(3), 4, cfg.stream(90, i));
      auto rep = inequalities::hls_contraction_check(f, 1.5, QuadratureSpec::monte_carlo(samples, cfg.stream(91, i)));
      rep.label = "trial " + std::to_string(i);
      t.check(rep.passes(), "hls trial " + std::to_string(i) + " margin " + detail::fmt(rep.margin));
      r.margins.push_back(rep.margin);
      r.reports.push_back(std::move(rep));
    }
    r.detail = std::to_string(pairs) + " pairs (" + std::to_string(exhaustive) + " exhaustive), " +
               std::to_string(trials) + " HLS trials";
  });
}

/// Exact sub-Laplacian formula, commutators, and the Cayley image.
inline CriterionResult criterion10(const AcceptanceConfig& cfg = {}) {
  return detail::run(10, "Heisenberg identities", [&](CriterionResult& r, detail::Tally& t) {
    const std::size_t polys = cfg.count(100);
    for (std::size_t i = 0; i < polys; ++i) {
      Rng rng(cfg.stream(10, i), 0);
      const int n = 1 + static_cast<int>(i % 3);
      const auto f = detail::random_rational_poly(rng, geometry::heisenberg_vars(n), 5, 6);
      t.check(geometry::heisenberg_deltab(f, n) == geometry::heisenberg_deltab_formula(f, n),
              "polynomial " + std::to_string(i));
    }
    using Op = exactpoly::FirstOrderOperator<Rational>;
    for (int n = 1; n <= 4; ++n) {
      const auto vars = geometry::heisenberg_vars(n);
      const auto fields = geometry::heisenberg_fields(n);
      const Op dt = Rational(-4) * Op::partial(vars, "t"), zero = Op::zero(vars);
      for (std::size_t j = 0; j < fields.X.size(); ++j)
        for (std::size_t k = 0; k < fields.X.size(); ++k) {
          const std::string at = " n=" + std::to_string(n) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
          t.check(commutator(fields.X[j], fields.Y[k]) == (j == k ? dt : zero), "[X,Y]" + at);
          t.check(commutator(fields.X[j], fields.X[k]) == zero, "[X,X]" + at);
          t.check(commutator(fields.Y[j], fields.Y[k]) == zero, "[Y,Y]" + at);
        }
    }
    const std::size_t points = cfg.count(1000);
    double worst = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
      Rng rng(cfg.stream(100, i), 0);
      const std::size_t n = 1 + i % 4;
      std::vector<double> v(2 * n + 1);
      const double s = std::exp(rng.uniform(-3.0, 3.0));
      for (double& e : v) e = s * rng.normal();
      const auto h = geometry::HeisenbergPoint::from_real_coords(v);
      for (double tt : {h.t, -h.t}) {
        double r2 = 0.0;
        for (const auto& w : geometry::detail::cayley_w(h, tt)) r2 += std::norm(w);
        worst = std::max(worst, std::abs(r2 - 1.0));
        t.check(std::abs(r2 - 1.0) <= 1e-12, "Cayley point " + std::to_string(i));
      }
    }
    r.detail = std::to_string(polys) + " polynomials, " + std::to_string(points) +
               " Cayley points, worst |w|^2 - 1 = " + detail::fmt(worst);
  });
}

inline const std::vector<std::function<CriterionResult(const AcceptanceConfig&)>>& criteria() {
  static const std::vector<std::function<CriterionResult(const AcceptanceConfig&)>> all{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  return all;
}

inline std::vector<CriterionResult> run_all(const AcceptanceConfig& cfg = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(c(cfg));
  return out;
}

inline std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(3);
  os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " - " << r.name << " (" << r.detail << ", "
     << std::fixed << r.seconds << " s)";
  return os.str();
}

}  // namespace flagsob::acceptance
