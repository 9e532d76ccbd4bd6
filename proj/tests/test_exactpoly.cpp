#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/exactpoly/harmonic.hpp"
#include "flagsob/exactpoly/operators.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace flagsob;
using namespace flagsob::exactpoly;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

RationalPoly var(const std::vector<std::string>& vars, const std::string& v) { return RationalPoly::variable(vars, v); }

RationalPoly random_homogeneous(std::mt19937_64& rng, std::size_t d, int degree, int terms) {
  auto vars = coordinate_names(d);
  RationalPoly p(vars);
  std::uniform_int_distribution<int> coef(-5, 5), pick(0, static_cast<int>(d) - 1);
  for (int t = 0; t < terms; ++t) {
    Exponent e(d, 0);
    for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(pick(rng))];
    p.add_term(e, Rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

RationalPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_degree, int terms) {
  RationalPoly p(vars);
  std::uniform_int_distribution<int> coef(-4, 4), pick(0, static_cast<int>(vars.size()) - 1), deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars.size(), 0);
    for (int i = deg(rng); i > 0; --i) ++e[static_cast<std::size_t>(pick(rng))];
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic", "[exactpoly]") {
  auto x = var(xyz, "x"), y = var(xyz, "y");
  CHECK((x + y) + (x - y) == x * Rational(2));
  CHECK(x * x == RationalPoly::monomial(xyz, {2, 0, 0}, Rational(1)));
  // (x^2 - y)(x^2 + y) = x^4 - y^2, expanded term by term.
  RationalPoly expected(xyz);
  expected.add_term({4, 0, 0}, Rational(1));
  expected.add_term({0, 2, 0}, Rational(-1));
  CHECK((x * x - y) * (x * x + y) == expected);
  CHECK((x - x).is_zero());
  CHECK((x - x).size() == 0);

  RationalPoly other = RationalPoly::variable({"a", "b"}, "a");
  CHECK_THROWS_AS(x + other, structural_error);
  CHECK_THROWS_AS(x * other, structural_error);
}

TEST_CASE("arithmetic is exact: associativity and distributivity", "[exactpoly]") {
  std::mt19937_64 rng(11);
  auto vars = coordinate_names(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, vars, 4, 5), b = random_poly(rng, vars, 4, 5), c = random_poly(rng, vars, 4, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rational normal form", "[exactpoly]") {
  Rational r = make_rational(6, -4);
  CHECK_THROWS(make_rational(1, 0));
  CHECK(numerator_string(r) == "-3");
  CHECK(denominator_string(r) == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("differentiate", "[exactpoly]") {
  auto x = var(xyz, "x"), y = var(xyz, "y");
  CHECK(differentiate(x * x * y, "x") == Rational(2) * x * y);
  CHECK(differentiate(x * x, "z").is_zero());
  // d/dx (x^3 - 3xy^2) = 3x^2 - 3y^2
  CHECK(differentiate(x.pow(3) - Rational(3) * x * y * y, "x") == Rational(3) * x * x - Rational(3) * y * y);
  CHECK_THROWS_AS(differentiate(x, "w"), structural_error);
}

TEST_CASE("euclidean laplacian", "[exactpoly]") {
  auto x = var(xyz, "x"), y = var(xyz, "y"), z = var(xyz, "z");
  CHECK(euclidean_laplacian(x * x + y * y + z * z, xyz) == RationalPoly::constant(xyz, Rational(6)));
  CHECK(euclidean_laplacian(x * x - y * y, xyz).is_zero());
  CHECK(euclidean_laplacian(x.pow(4), xyz) == Rational(12) * x * x);
}

TEST_CASE("harmonic projection examples", "[exactpoly]") {
  auto x = var(xyz, "x"), y = var(xyz, "y"), z = var(xyz, "z");
  auto r2 = x * x + y * y + z * z;
  auto comps = harmonic_projection(x * x, xyz);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].degree == 2);
  CHECK(comps[0].harmonic == x * x - Rational(1, 3) * r2);
  CHECK(comps[1].degree == 0);
  CHECK(comps[1].radial_power == 1);
  CHECK(comps[1].harmonic == RationalPoly::constant(xyz, Rational(1, 3)));

  auto xy = harmonic_projection(x * y, xyz);
  REQUIRE(xy.size() == 1);
  CHECK(xy[0].harmonic == x * y);

  auto h = x.pow(3) - Rational(3) * x * y * y;
  auto hh = harmonic_projection(h, xyz);
  REQUIRE(hh.size() == 1);
  CHECK(hh[0].harmonic == h);

  CHECK_THROWS_AS(harmonic_projection(x * x + y, xyz), domain_error);
  CHECK_THROWS_AS(harmonic_projection(x.pow(13), xyz), domain_error);
  PolyCaps caps;
  caps.max_degree = 14;
  CHECK_NOTHROW(harmonic_projection(x.pow(13), xyz, caps));
}

TEST_CASE("harmonic projection on random inputs", "[exactpoly]") {
  std::mt19937_64 rng(2024);
  for (std::size_t d : {2u, 3u, 5u, 8u, 16u}) {
    for (int degree = 0; degree <= 8; degree += (d > 8 ? 2 : 1)) {
      auto p = random_homogeneous(rng, d, degree, d > 8 ? 3 : 5);
      auto vars = p.vars();
      std::vector<std::size_t> dims(d);
      for (std::size_t i = 0; i < d; ++i) dims[i] = i;
      auto comps = harmonic_projection(p, std::span<const std::size_t>(dims));
      for (const auto& c : comps) {
        CHECK(euclidean_laplacian(c.harmonic, std::span<const std::size_t>(dims)).is_zero());
        CHECK(c.harmonic.is_homogeneous_in(dims));
        CHECK((c.harmonic.is_zero() || c.harmonic.degree() == c.degree));
      }
      CHECK(reassemble(comps, vars, dims) == p);
    }
  }
}

TEST_CASE("harmonic projection over a subset of variables", "[exactpoly]") {
  // t is inert: p = t * x^2 projects in (x, y) only.
  std::vector<std::string> vars{"x", "y", "t"};
  auto x = var(vars, "x"), y = var(vars, "y"), t = var(vars, "t");
  auto comps = harmonic_projection(t * x * x, std::vector<std::string>{"x", "y"});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].harmonic == t * (x * x - y * y) * Rational(1, 2));
  CHECK(comps[1].harmonic == t * Rational(1, 2));
}

TEST_CASE("bidegree split", "[exactpoly]") {
  std::vector<std::string> vars{"x1", "y1", "x2", "y2"};
  auto cx = [&](const std::string& v) { return ComplexPoly::variable(vars, v); };
  const ComplexRational i = ComplexRational::i();
  ComplexPoly z1 = cx("x1") + cx("y1") * i, z2 = cx("x2") + cx("y2") * i;
  ComplexPoly z1bar = z1.conj(), z2bar = z2.conj();
  std::vector<ComplexPair> pairs{{0, 1}, {2, 3}};

  auto s = bidegree_split(z1 * z2bar, pairs);
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first == Bidegree{1, 1});
  CHECK(s.begin()->second == z1 * z2bar);

  // Re(z1^2) = (z1^2 + z1bar^2) / 2
  ComplexPoly re = cx("x1") * cx("x1") - cx("y1") * cx("y1");
  auto r = bidegree_split(re, pairs);
  REQUIRE(r.size() == 2);
  CHECK(r.at({2, 0}) == z1 * z1 * ComplexRational(Rational(1, 2)));
  CHECK(r.at({0, 2}) == z1bar * z1bar * ComplexRational(Rational(1, 2)));

  auto one = bidegree_split(ComplexPoly::constant(vars, ComplexRational(1)), pairs);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == Bidegree{0, 0});
}

TEST_CASE("bidegree split reassembles and matches rotation weights", "[exactpoly]") {
  std::mt19937_64 rng(5);
  std::vector<std::string> vars{"x1", "y1", "x2", "y2"};
  std::vector<ComplexPair> pairs{{0, 1}, {2, 3}};
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPoly p = to_complex_poly(random_poly(rng, vars, 4, 6));
    auto parts = bidegree_split(p, pairs);
    ComplexPoly sum(vars);
    for (const auto& [bd, q] : parts) {
      sum += q;
      // q(e^{i theta} z) = e^{i (a - b) theta} q(z) at a sample point.
      const double th = 0.7;
      const double pt[4] = {0.3, -0.8, 0.5, 0.2};
      double rot[4];
      for (int j = 0; j < 2; ++j) {
        rot[2 * j] = std::cos(th) * pt[2 * j] - std::sin(th) * pt[2 * j + 1];
        rot[2 * j + 1] = std::sin(th) * pt[2 * j] + std::cos(th) * pt[2 * j + 1];
      }
      auto lhs = q.evaluate(rot);
      auto rhs = std::polar(1.0, (bd.first - bd.second) * th) * q.evaluate(pt);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    CHECK(sum == p);
  }
}

TEST_CASE("first-order operators", "[exactpoly]") {
  auto x = var(xyz, "x");
  auto dx = FirstOrderOperator<Rational>::partial(xyz, "x");
  CHECK(apply_operator(dx, x * x) == Rational(2) * x);
  std::vector<std::string> other{"a"};
  CHECK_THROWS_AS(apply_operator(dx, RationalPoly::variable(other, "a")), structural_error);
  CHECK_THROWS_AS(FirstOrderOperator<Rational>({RationalPoly(xyz)}), structural_error);
  // [x d/dy, d/dx] = -d/dy
  auto xdy = FirstOrderOperator<Rational>({RationalPoly(xyz), x, RationalPoly(xyz)});
  auto dy = FirstOrderOperator<Rational>::partial(xyz, "y");
  CHECK(commutator(xdy, dx) == Rational(-1) * dy);
}

TEST_CASE("exact sphere averages", "[exactpoly]") {
  auto x = var(xyz, "x"), y = var(xyz, "y");
  std::vector<std::size_t> dims{0, 1, 2};
  CHECK(sphere_average(x * x, std::span<const std::size_t>(dims)) == Rational(1, 3));
  CHECK(sphere_average(x.pow(4), std::span<const std::size_t>(dims)) == Rational(1, 5));
  CHECK(sphere_average(x * x * y * y, std::span<const std::size_t>(dims)) == Rational(1, 15));
  CHECK(sphere_average(x * y, std::span<const std::size_t>(dims)) == 0);
}

TEST_CASE("compiled polynomial evaluation and gradient", "[exactpoly]") {
  std::mt19937_64 rng(9);
  auto vars = coordinate_names(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_poly(rng, vars, 5, 8);
    CompiledPoly cp(p);
    std::vector<double> pt{0.3, -0.2, 0.9, -0.7, 0.1};
    CHECK(cp.value(pt) == Catch::Approx(p.evaluate(pt).real()).margin(1e-13));
    std::vector<double> g(5);
    cp.value_and_gradient(pt, g);
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(g[i] == Catch::Approx(differentiate(p, i).evaluate(pt).real()).margin(1e-12));
  }
}
