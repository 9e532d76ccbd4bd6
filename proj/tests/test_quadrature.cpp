#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/exactpoly/harmonic.hpp"
#include "flagsob/quadrature/heisenberg_mu.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cstring>

using namespace flagsob;
using namespace flagsob::quadrature;
using Catch::Approx;

namespace {

// E[x^alpha] on S^d for the normalized measure, via Gaussian moments.
double sphere_moment(const std::vector<int>& alpha) {
  const double D = static_cast<double>(alpha.size());
  double s = 0.0, lg = 0.0;
  for (int a : alpha) {
    if (a % 2) return 0.0;
    lg += std::lgamma(0.5 * (a + 1)) - std::lgamma(0.5);
    s += a;
  }
  return std::exp(lg + std::lgamma(0.5 * D) - std::lgamma(0.5 * (D + s)));
}

double double_factorial_odd(int a) {
  if (a % 2) return 0.0;
  double r = 1.0;
  for (int i = a - 1; i > 1; i -= 2) r *= i;
  return r;
}

bool bit_equal(const IntegralResult& a, const IntegralResult& b) {
  return std::memcmp(&a.value, &b.value, sizeof(double)) == 0 &&
         std::memcmp(&a.std_error, &b.std_error, sizeof(double)) == 0 && a.nodes_used == b.nodes_used;
}

}  // namespace

TEST_CASE("quadrature spec", "[quadrature]") {
  CHECK_THROWS_AS(QuadratureSpec(Kind::monte_carlo, 0), structural_error);
  CHECK_THROWS_AS(parse_kind("simpson"), structural_error);
  for (Kind k : {Kind::monte_carlo, Kind::sphere_product_rule, Kind::gauss_hermite, Kind::adaptive_radial})
    CHECK(parse_kind(to_string(k)) == k);
  const QuadratureSpec s(Kind::gauss_hermite, 12, 99);
  const nlohmann::json j = s;
  CHECK(j.at("kind") == "gauss-hermite");
  CHECK(j.at("size") == 12);
  CHECK(j.at("seed") == 99);
  CHECK(j.get<QuadratureSpec>() == s);
  CHECK_THROWS(nlohmann::json{{"kind", "monte-carlo"}, {"size", 0}}.get<QuadratureSpec>());
}

TEST_CASE("moment accumulator", "[quadrature]") {
  MomentAccumulator acc(2);
  for (int i = 0; i < 1000; ++i) {
    const double v[2] = {0.1, 0.1 * i};
    acc.add(v);
  }
  CHECK(acc.mean(0) == 0.1);
  CHECK(acc.std_error(0) == 0.0);
  CHECK(acc.mean(1) == Approx(49.95).epsilon(1e-14));
  // sample variance of 0.1*i, i < 1000, divided by n
  CHECK(acc.mean_cov(1, 1) == Approx(0.01 * 1000.0 * 1001.0 / 12.0 / 1000.0).epsilon(1e-12));
  CHECK(acc.mean_cov(0, 1) == 0.0);
}

TEST_CASE("one-dimensional Gauss rules", "[quadrature]") {
  const Rule1D h2 = gauss_hermite(2);
  CHECK(h2.nodes[0] == Approx(-1.0).epsilon(1e-14));
  CHECK(h2.nodes[1] == Approx(1.0).epsilon(1e-14));
  CHECK(h2.weights[0] == Approx(0.5).epsilon(1e-14));
  const Rule1D h3 = gauss_hermite(3);
  CHECK(h3.nodes[2] == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(h3.weights[1] == Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(h3.weights[2] == Approx(1.0 / 6.0).epsilon(1e-14));

  const Rule1D leg = gauss_jacobi(2, 0.0, 0.0);
  CHECK(leg.nodes[1] == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));

  // (x+1)/2 ~ Beta(beta+1, alpha+1) under the normalized Jacobi weight.
  for (auto [alpha, beta] : {std::pair{0.5, 1.5}, {-0.5, 0.0}, {2.0, 3.0}, {1.5, 1.5}}) {
    const std::size_t m = 6;
    const Rule1D r = gauss_jacobi(m, alpha, beta);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == Approx(1.0).epsilon(1e-14));
    for (int j = 0; j <= 2 * static_cast<int>(m) - 1; ++j) {
      double oracle = 1.0;
      for (int i = 0; i < j; ++i) oracle *= (beta + 1 + i) / (alpha + beta + 2 + i);
      double q = 0.0;
      for (std::size_t i = 0; i < m; ++i) q += r.weights[i] * std::pow(0.5 * (r.nodes[i] + 1.0), j);
      CHECK(q == Approx(oracle).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(gauss_jacobi(3, -1.0, 0.0), domain_error);
}

TEST_CASE("sphere integration: normalization and examples", "[quadrature]") {
  auto one = [](std::span<const double>) { return 1.0; };
  for (std::size_t d : {1u, 2u, 3u, 5u, 7u, 15u}) {
    CHECK(integrate_sphere(d, one, QuadratureSpec::monte_carlo(1000, 3)).value == 1.0);
    CHECK(integrate_sphere(d, one, QuadratureSpec::monte_carlo(1000, 3)).std_error == 0.0);
    if (d <= 7) {
      CHECK(integrate_sphere(d, one, {Kind::sphere_product_rule, 3}).value == 1.0);
      CHECK(integrate_sphere(d, one, {Kind::adaptive_radial, 3}).value == 1.0);
    }
    auto x1sq = [](std::span<const double> x) { return x[0] * x[0]; };
    const auto mc = integrate_sphere(d, x1sq, QuadratureSpec::monte_carlo(200000, 11));
    CHECK(std::abs(mc.value - 1.0 / (d + 1.0)) <= 4.0 * mc.std_error);
    if (d <= 7) CHECK(integrate_sphere(d, x1sq, {Kind::sphere_product_rule, 2}).value == Approx(1.0 / (d + 1.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(integrate_sphere(0, one, QuadratureSpec::monte_carlo(10, 1)), domain_error);
  CHECK_THROWS_AS(integrate_sphere(2, one, {Kind::gauss_hermite, 4}), structural_error);
}

TEST_CASE("sphere product rule integrates monomials exactly", "[quadrature]") {
  Rng rng(5, 0);
  for (std::size_t d : {1u, 2u, 3u, 4u, 5u}) {
    const std::size_t m = 4;
    const PointRule r = sphere_product_rule(d, m);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> alpha(d + 1, 0);
      const int deg = static_cast<int>(rng.below(2 * m));
      for (int i = 0; i < deg; ++i) ++alpha[rng.below(d + 1)];
      double q = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        double v = r.weights[i];
        for (std::size_t a = 0; a <= d; ++a) v *= std::pow(r.point(i)[a], alpha[a]);
        q += v;
      }
      CHECK(q == Approx(sphere_moment(alpha)).margin(1e-14));
    }
  }
}

TEST_CASE("harmonics integrate to zero", "[quadrature]") {
  using namespace flagsob::exactpoly;
  const auto vars = coordinate_names(4);
  const auto x = [&](const char* v) { return RationalPoly::variable(vars, v); };
  RationalPoly p = x("x1") * x("x2") * x("x3") + Rational(3) * x("x3").pow(3) + x("x1").pow(2) * x("x4");
  const auto comps = harmonic_projection(p, vars);
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) {
    const CompiledPoly y(comp.harmonic);
    auto f = [&](std::span<const double> x) { return y.value(x); };
    const auto mc = integrate_sphere(3, f, QuadratureSpec::monte_carlo(100000, 21));
    CHECK(std::abs(mc.value) <= 3.0 * mc.std_error);
    CHECK(std::abs(integrate_sphere(3, f, {Kind::sphere_product_rule, 4}).value) < 1e-13);
  }
}

TEST_CASE("Gaussian integration", "[quadrature]") {
  auto one = [](std::span<const double>) { return 1.0; };
  auto x1sq = [](std::span<const double> x) { return x[0] * x[0]; };
  auto x1q = [](std::span<const double> x) { return std::pow(x[0], 4); };
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(integrate_gauss(k, one, {Kind::gauss_hermite, 5}).value == 1.0);
    CHECK(integrate_gauss(k, one, QuadratureSpec::monte_carlo(100, 2)).value == 1.0);
    CHECK(integrate_gauss(k, x1sq, {Kind::gauss_hermite, 5}).value == Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(integrate_gauss(k, x1q, {Kind::gauss_hermite, 5}).value - 3.0) <= 1e-10);
    const auto mc = integrate_gauss(k, x1sq, QuadratureSpec::monte_carlo(200000, 4));
    CHECK(std::abs(mc.value - 1.0) <= 4.0 * mc.std_error);
  }
  // Tensor rule exact for x^a y^b, a, b <= 2m-1.
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b) {
      auto f = [a, b](std::span<const double> x) { return std::pow(x[0], a) * std::pow(x[1], b); };
      CHECK(integrate_gauss(2, f, {Kind::gauss_hermite, 4}).value ==
            Approx(double_factorial_odd(a) * double_factorial_odd(b)).margin(1e-13 * double_factorial_odd(a + a % 2) * double_factorial_odd(b + b % 2) * 100));
    }
  CHECK_THROWS_AS(integrate_gauss(5, one, {Kind::gauss_hermite, 3}), domain_error);
  CHECK_THROWS_AS(integrate_gauss(2, one, {Kind::sphere_product_rule, 3}), structural_error);
}

TEST_CASE("non-finite integrand names the point", "[quadrature]") {
  auto bad = [](std::span<const double> x) { return x[0] > 0.5 ? std::nan("") : 1.0; };
  try {
    integrate_sphere(2, bad, QuadratureSpec::monte_carlo(1000, 1));
    FAIL("expected numeric_error");
  } catch (const numeric_error& e) {
    CHECK(std::string(e.what()).find("non-finite integrand value at (") != std::string::npos);
  }
  CHECK_THROWS_AS(integrate_gauss(1, [](std::span<const double> x) { return 1.0 / (x[0] - x[0]); },
                                  {Kind::gauss_hermite, 3}),
                  numeric_error);
}

TEST_CASE("weighted R^k integration", "[quadrature]") {
  auto one = [](std::span<const double>) { return 1.0; };
  CHECK(integrate_weighted_rn(1, 1.0, -1.0, one, {Kind::adaptive_radial, 4}).value ==
        Approx(std::numbers::pi).epsilon(1e-12));
  const auto mc = integrate_weighted_rn(1, 1.0, -1.0, one, QuadratureSpec::monte_carlo(1000, 1));
  CHECK(mc.value == Approx(std::numbers::pi).epsilon(1e-14));

  // Radial oracle: area(S^{k-1}) * int_0^inf r^{k-1} g(r) (1 + r^2/n)^e dr by exp-sinh.
  boost::math::quadrature::exp_sinh<double> es;
  for (std::size_t k : {1u, 2u, 3u}) {
    for (double n : {1.0, 2.5, 6.0}) {
      for (double e : {-2.0, -3.5}) {
        if (!(-2.0 * e > k + 2.0)) continue;
        const double kd = static_cast<double>(k);
        const double area = 2.0 * std::pow(std::numbers::pi, 0.5 * kd) / std::tgamma(0.5 * kd);
        for (int power : {0, 2}) {
          const double oracle =
              area * es.integrate([&](double r) {
                if (r == 0.0) return kd - 1 + power == 0 ? 1.0 : 0.0;
                const double lw = r < 1 ? std::log1p(r * r / n) : 2 * std::log(r) - std::log(n) + std::log1p(n / (r * r));
                return std::exp((kd - 1 + power) * std::log(r) + e * lw);
              });
          auto f = [power](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return power ? s : 1.0;
          };
          CHECK(integrate_weighted_rn(k, n, e, f, {Kind::adaptive_radial, 4}).value == Approx(oracle).epsilon(1e-9));
          const auto m = integrate_weighted_rn(k, n, e, f, QuadratureSpec::monte_carlo(200000, 8));
          CHECK(std::abs(m.value - oracle) <= 4.0 * m.std_error + 1e-12 * oracle);
        }
      }
    }
  }
  auto odd = [](std::span<const double> x) { return x[0] * (1.0 + x[1] * x[1]); };
  const auto o = integrate_weighted_rn(2, 3.0, -4.0, odd, QuadratureSpec::monte_carlo(100000, 5));
  CHECK(std::abs(o.value) <= 3.0 * o.std_error);
  CHECK(std::abs(integrate_weighted_rn(2, 3.0, -4.0, odd, {Kind::adaptive_radial, 4}).value) < 1e-12);

  CHECK_THROWS_AS(integrate_weighted_rn(2, 1.0, -1.0, one, {Kind::adaptive_radial, 4}), domain_error);
  CHECK_THROWS_AS(integrate_weighted_rn(1, 1.0, -0.5, one, QuadratureSpec::monte_carlo(10, 1)), domain_error);
  CHECK_THROWS_AS(integrate_weighted_rn(1, 1.0, -2.0, one, {Kind::gauss_hermite, 4}), structural_error);
}

TEST_CASE("Heisenberg mu_n integration", "[quadrature]") {
  auto one = [](std::span<const double>) { return 1.0; };
  const double pi = std::numbers::pi;
  // 1/c'_n with c'_n = (2n)^{-n-1} pi^{-n-1/2} Gamma(2n+1)/Gamma(n+1/2)
  auto inv_c = [pi](double n) {
    return std::pow(2 * n, n + 1) * std::pow(pi, n + 0.5) * std::tgamma(n + 0.5) / std::tgamma(2 * n + 1);
  };
  CHECK(inv_c(1) == Approx(pi * pi).epsilon(1e-14));
  CHECK(integrate_heisenberg_mu(1, one, QuadratureSpec::monte_carlo(10, 1)).value == Approx(pi * pi).epsilon(1e-13));
  CHECK(integrate_heisenberg_mu(1, one, {Kind::adaptive_radial, 2}).value == Approx(pi * pi).epsilon(1e-9));
  CHECK(integrate_heisenberg_mu(2, one, {Kind::adaptive_radial, 2}).value == Approx(inv_c(2)).epsilon(1e-9));

  // Non-constant integrands: the exact sampler against the adaptive rule.
  for (std::size_t n : {1u, 2u, 3u}) {
    auto g = [n](std::span<const double> v) {
      double z2 = 0.0;
      for (std::size_t i = 0; i < 2 * n; ++i) z2 += v[i] * v[i];
      return 1.0 / (1.0 + z2 + 0.3 * v[2 * n] * v[2 * n] / (4.0 * n * n)) + v[n] * v[n] / (2.0 * n);
    };
    const double dn = static_cast<double>(n);
    const auto mc = integrate_heisenberg_mu(n, g, QuadratureSpec::monte_carlo(100000, 17));
    const auto ar = integrate_heisenberg_mu(n, g, {Kind::adaptive_radial, 4});
    CHECK(std::abs(mc.value - ar.value) <= 4.0 * mc.std_error);
    const auto mass = integrate_heisenberg_mu(n, one, QuadratureSpec::monte_carlo(100000, 3));
    CHECK(mass.value == Approx(inv_c(dn)).epsilon(5e-3));
  }
  auto odd_t = [](std::span<const double> v) { return v[2] * (1.0 + v[0] * v[0]); };
  const auto o = integrate_heisenberg_mu(1, odd_t, QuadratureSpec::monte_carlo(100000, 9), 3.0);
  CHECK(std::abs(o.value) <= 3.0 * o.std_error);
  CHECK(std::abs(integrate_heisenberg_mu(1, odd_t, {Kind::adaptive_radial, 3}, 3.0).value) < 1e-12);

  // Other exponents: the total mass of Q^{-m} by the adaptive rule.
  for (double m : {2.5, 3.0, 4.0}) {
    const double oracle = std::exp(heisenberg_log_mass(2, m));
    CHECK(integrate_heisenberg_mu(2, one, {Kind::adaptive_radial, 2}, m).value == Approx(oracle).epsilon(1e-9));
  }
  CHECK_THROWS_AS(integrate_heisenberg_mu(1, one, QuadratureSpec::monte_carlo(10, 1), 1.0), domain_error);
}

TEST_CASE("results are a pure function of the spec", "[quadrature]") {
  auto f = [](std::span<const double> x) { return std::exp(x[0]) * x[1]; };
  const auto a = integrate_sphere(4, f, QuadratureSpec::monte_carlo(5000, 42));
  const auto b = integrate_sphere(4, f, QuadratureSpec::monte_carlo(5000, 42));
  const auto c = integrate_sphere(4, f, QuadratureSpec::monte_carlo(5000, 43));
  CHECK(bit_equal(a, b));
  CHECK_FALSE(bit_equal(a, c));
  CHECK(bit_equal(integrate_gauss(3, f, QuadratureSpec::monte_carlo(500, 1)),
                  integrate_gauss(3, f, QuadratureSpec::monte_carlo(500, 1))));
  CHECK(bit_equal(integrate_heisenberg_mu(2, f, QuadratureSpec::monte_carlo(500, 1)),
                  integrate_heisenberg_mu(2, f, QuadratureSpec::monte_carlo(500, 1))));
}

TEST_CASE("Monte Carlo coverage over 100 seeds", "[quadrature]") {
  auto x1sq = [](std::span<const double> x) { return x[0] * x[0]; };
  auto x1q = [](std::span<const double> x) { return std::pow(x[0], 4); };
  int sphere_ok = 0, gauss_ok = 0, heis_ok = 0;
  const double pi = std::numbers::pi;
  // mu_1 integrates (1 + |z|^2/2)^{-1} to pi^2 * (int (1+u)^{-4} du) / (int (1+u)^{-3} du) = 2 pi^2 / 3
  auto z2 = [](std::span<const double> v) { return 1.0 / (1.0 + 0.5 * (v[0] * v[0] + v[1] * v[1])); };
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto a = integrate_sphere(3, x1sq, QuadratureSpec::monte_carlo(4000, s));
    sphere_ok += std::abs(a.value - 0.25) <= 4.0 * a.std_error;
    const auto b = integrate_gauss(2, x1q, QuadratureSpec::monte_carlo(4000, s));
    gauss_ok += std::abs(b.value - 3.0) <= 4.0 * b.std_error;
    const auto c = integrate_heisenberg_mu(1, z2, QuadratureSpec::monte_carlo(4000, s));
    heis_ok += std::abs(c.value - pi * pi * 2.0 / 3.0) <= 4.0 * c.std_error;
  }
  CHECK(sphere_ok >= 99);
  CHECK(gauss_ok >= 99);
  CHECK(heis_ok >= 99);
}
