#include "flagsob/spectra/table.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <set>

using namespace flagsob;
using namespace flagsob::spectra;

namespace {

const std::vector<CaseId> all_cases() {
  std::vector<CaseId> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(CaseId::real(n + 1));
    out.push_back(CaseId::complex(n));
    out.push_back(CaseId::quaternionic(n));
  }
  out.push_back(CaseId::octonionic());
  return out;
}

// Gamma(a)/Gamma(b) for a - b a positive integer, by recursion.
Rational shifted_product(Rational b, int steps) {
  Rational out(1);
  for (int i = 0; i < steps; ++i) out *= b + i;
  return out;
}

}  // namespace

TEST_CASE("case table", "[spectra]") {
  CHECK(CaseId::real(3).sphere_dim() == 3);
  CHECK(CaseId::complex(2).sphere_dim() == 5);
  CHECK(CaseId::quaternionic(1).sphere_dim() == 7);
  CHECK(CaseId::octonionic().sphere_dim() == 15);
  CHECK(CaseId::octonionic().rho() == 11);
  CHECK(CaseId::octonionic().m_alpha() == 8);
  CHECK(CaseId::octonionic().m_2alpha() == 7);
  CHECK(CaseId::quaternionic(2).sharp_constant() == Rational(1, 8));
  CHECK(CaseId::complex(3).special_parameter() == 3);
  CHECK(CaseId::quaternionic(1).special_parameter() == 4);
  CHECK(CaseId::real(4).special_parameter() == 1);
  CHECK(CaseId::complex(1).rho() == 2);
  CHECK(parse_family("quaternionic") == Family::quaternionic);
  CHECK_THROWS_AS(parse_family("split"), domain_error);
  CHECK_THROWS_AS(CaseId::real(0), domain_error);
}

TEST_CASE("label validation", "[spectra]") {
  CHECK_THROWS_AS(validate(CaseId::quaternionic(1), {2, 1}), domain_error);
  CHECK_THROWS_AS(validate(CaseId::quaternionic(1), {1, 3}), domain_error);
  CHECK_THROWS_AS(validate(CaseId::octonionic(), {3, 0}), domain_error);
  CHECK_THROWS_AS(validate(CaseId::real(3), {1, 1}), domain_error);
  CHECK_THROWS_AS(deltab_eigenvalue(CaseId::complex(1), {-1, 0}), domain_error);
  CHECK(degree(CaseId::complex(1), {2, 3}) == 5);
  CHECK(degree(CaseId::octonionic(), {4, 2}) == 4);
}

TEST_CASE("intertwiner eigenvalue examples", "[spectra]") {
  for (int nu_num : {-3, 1, 5, 7})
    CHECK(*intertwiner_eigenvalue(CaseId::real(5), {0, 0}, Rational(nu_num, 3)).exact == 1);
  CHECK(*intertwiner_eigenvalue(CaseId::real(3), {2, 0}, Rational(1)).exact == 3);
  auto oct = intertwiner_eigenvalue(CaseId::octonionic(), {0, 0}, Rational(1), Parameter::r);
  CHECK(*oct.exact == 1);
  // nu = 11 - r gives the same value.
  CHECK(*intertwiner_eigenvalue(CaseId::octonionic(), {4, 2}, Rational(10)).exact ==
        *intertwiner_eigenvalue(CaseId::octonionic(), {4, 2}, Rational(1), Parameter::r).exact);
  CHECK_THROWS_AS(intertwiner_eigenvalue(CaseId::complex(1), {1, 0}, Rational(1), Parameter::r), structural_error);
}

TEST_CASE("poles name the offending factor", "[spectra]") {
  try {
    intertwiner_eigenvalue(CaseId::real(3), {2, 0}, Rational(0));
    FAIL("expected a pole");
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()).find("nu+j-1") != std::string::npos);
  }
  CHECK_THROWS_AS(intertwiner_eigenvalue(CaseId::quaternionic(1), {4, 0}, Rational(2)), domain_error);
  CHECK_THROWS_AS(intertwiner_eigenvalue(CaseId::octonionic(), {0, 0}, Rational(11), Parameter::r), domain_error);
  CHECK_THROWS_AS(intertwiner_eigenvalue(CaseId::complex(1), {1, 0}, 0.0), domain_error);
}

TEST_CASE("octonionic exact and log-gamma paths agree", "[spectra]") {
  const CaseId o = CaseId::octonionic();
  for (const auto& l : enumerate_ktypes(o, 40)) {
    for (int r : {-3, -1, 1, 3}) {
      auto ex = intertwiner_eigenvalue(o, l, Rational(r), Parameter::r);
      auto lg = intertwiner_eigenvalue(o, l, Rational(r), Parameter::r, EvalMode::force_log_gamma);
      REQUIRE(ex.exact);
      CHECK(lg.source == SpectralValue::Source::log_gamma);
      CHECK(lg.approx == Catch::Approx(ex.approx).epsilon(1e-10));
    }
  }
  // Non-integer r only has the log-gamma path; compare against a 50-digit oracle.
  using big = boost::multiprecision::cpp_bin_float_50;
  const int k = 2, j = 3;
  const big r("0.5"), h = r / 2;
  const big oracle = boost::math::tgamma(big(j + k) + big("5.5") + h) * boost::math::tgamma(big("5.5") - h) *
                     boost::math::tgamma(big(k) + big("2.5") + h) * boost::math::tgamma(big("2.5") - h) /
                     (boost::math::tgamma(big(j + k) + big("5.5") - h) * boost::math::tgamma(big("5.5") + h) *
                      boost::math::tgamma(big(k) + big("2.5") - h) * boost::math::tgamma(big("2.5") + h));
  auto v = intertwiner_eigenvalue(o, {j + 2 * k, j}, 0.5, Parameter::r);
  CHECK(v.exact == std::nullopt);
  CHECK(v.approx == Catch::Approx(oracle.convert_to<double>()).epsilon(1e-12));
}

TEST_CASE("octonionic telescoping oracle at r = 1", "[spectra]") {
  // Gamma(x+1/2)/Gamma(x-1/2) = x - 1/2, so 40 a_{k,j}(1) = 40 (j+k+5)(k+2) / (5 * 2).
  const CaseId o = CaseId::octonionic();
  for (const auto& l : enumerate_ktypes(o, 30)) {
    const int k = (l.first - l.second) / 2, j = l.second;
    CHECK(*intertwiner_eigenvalue(o, l, Rational(1), Parameter::r).exact * 40 == 4 * (j + k + 5) * (k + 2));
  }
}

TEST_CASE("classical products against Gamma-ratio oracles", "[spectra]") {
  // Real case: a_k(nu) = Gamma(n - nu + k)/Gamma(n - nu) * Gamma(nu)/Gamma(nu + k).
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 12; ++k) {
      const Rational nu(2 * n - 1, 7);
      Rational oracle = shifted_product(Rational(n) - nu, k) / shifted_product(nu, k);
      CHECK(*intertwiner_eigenvalue(CaseId::real(n), {k, 0}, nu).exact == oracle);
    }
  // Complex case factorizes into two one-index products.
  const CaseId c = CaseId::complex(2);
  const Rational nu(5, 3);
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      CHECK(*intertwiner_eigenvalue(c, {p, q}, nu).exact ==
            *intertwiner_eigenvalue(c, {p, 0}, nu).exact * *intertwiner_eigenvalue(c, {q, 0}, nu).exact);
  // Double path agrees with the exact path.
  CHECK(intertwiner_eigenvalue(c, {3, 2}, 5.0 / 3.0).approx == Catch::Approx(intertwiner_eigenvalue(c, {3, 2}, nu).approx));
}

TEST_CASE("deltab eigenvalue examples", "[spectra]") {
  CHECK(deltab_eigenvalue(CaseId::real(2), {1, 0}) == 2);
  CHECK(deltab_eigenvalue(CaseId::octonionic(), {0, 0}) == 0);
  CHECK(deltab_eigenvalue(CaseId::complex(1), {1, 0}) == 2);
  CHECK(deltab_eigenvalue(CaseId::complex(2), {2, 1}) == 4 * 2 + 2 * 3 * 2);
  CHECK(deltab_eigenvalue(CaseId::quaternionic(1), {2, 0}) == 16);
  CHECK(deltab_eigenvalue(CaseId::quaternionic(1), {2, 2}) == 8);
  CHECK(deltab_eigenvalue(CaseId::octonionic(), {2, 0}) == 32);
  CHECK(deltab_eigenvalue(CaseId::octonionic(), {2, 2}) == 16);
}

TEST_CASE("deltab spectrum is nonnegative and monotone in degree", "[spectra]") {
  for (const auto& c : all_cases()) {
    std::map<int, long long> last;  // secondary label -> last eigenvalue
    for (const auto& l : enumerate_ktypes(c, 60)) {
      const long long v = deltab_eigenvalue(c, l);
      CHECK(v >= 0);
      auto it = last.find(l.second);
      if (it != last.end()) CHECK(v >= it->second);
      last[l.second] = v;
    }
  }
}

TEST_CASE("yamabe eigenvalue", "[spectra]") {
  CHECK(yamabe_eigenvalue(5, 0) == Rational(15, 4));
  CHECK(yamabe_eigenvalue(2, 0) == 0);
  CHECK(yamabe_eigenvalue(3, 1) == Rational(15, 4));
  CHECK_THROWS_AS(yamabe_eigenvalue(0, 1), domain_error);
}

TEST_CASE("special parameter identities", "[spectra]") {
  auto id = special_nu_identity(CaseId::complex(1), {0, 0});
  CHECK(*id.lhs == 1);
  CHECK(id.rhs == 1);
  auto q = special_nu_identity(CaseId::quaternionic(1), {2, 0});
  CHECK(q.rhs == 24);
  CHECK(*q.lhs == 24);
  CHECK(*q.shifted == 16);
  CHECK(q.deltab == 16);
  auto o = special_nu_identity(CaseId::octonionic(), {0, 0});
  CHECK(*o.lhs == 40);
  CHECK(*o.shifted == 0);
  auto d = special_nu_identity(CaseId::real(2), {3, 0});
  CHECK(d.degenerate);
  CHECK(d.note.find("degenerate") != std::string::npos);

  for (const auto& c : all_cases())
    for (const auto& l : enumerate_ktypes(c, 40)) {
      auto s = special_nu_identity(c, l);
      if (s.degenerate) continue;
      INFO(c.name() << " " << label_string(l));
      CHECK(*s.lhs == s.rhs);
      CHECK(*s.shifted == s.deltab);
    }
}

TEST_CASE("theorem bound margins and equality sets", "[spectra]") {
  CHECK(theorem_bound_margin(CaseId::real(7), {1, 0}) == 0);
  CHECK(theorem_bound_margin(CaseId::complex(3), {5, 0}) == 0);
  CHECK(theorem_bound_margin(CaseId::octonionic(), {6, 6}) == 0);
  CHECK(theorem_bound_margin(CaseId::complex(2), {1, 1}) == 1);  // 2pq/n
  for (const auto& c : all_cases())
    for (const auto& l : enumerate_ktypes(c, 50)) {
      const Rational m = theorem_bound_margin(c, l);
      CHECK(m >= 0);
      CHECK((m == 0) == in_equality_set(c, l));
    }
}

TEST_CASE("enumerate ktypes", "[spectra]") {
  using V = std::vector<KTypeLabel>;
  CHECK(enumerate_ktypes(CaseId::complex(1), 1) == V{{0, 0}, {1, 0}, {0, 1}});
  CHECK(enumerate_ktypes(CaseId::quaternionic(1), 2) == V{{0, 0}, {1, 1}, {2, 0}, {2, 2}});
  CHECK(enumerate_ktypes(CaseId::octonionic(), 2) == V{{0, 0}, {1, 1}, {2, 0}, {2, 2}});
  CHECK(enumerate_ktypes(CaseId::real(3), 3).size() == 4);
  CHECK_THROWS_AS(enumerate_ktypes(CaseId::real(3), -1), domain_error);
  for (const auto& c : all_cases()) {
    auto ls = enumerate_ktypes(c, 12);
    std::set<KTypeLabel> uniq(ls.begin(), ls.end());
    CHECK(uniq.size() == ls.size());
    // Completeness against a brute-force filter.
    std::size_t count = 0;
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b <= 12; ++b)
        if (is_valid(c, {a, b}) && degree(c, {a, b}) <= 12) ++count;
    CHECK(count == ls.size());
  }
}

TEST_CASE("log gamma", "[spectra]") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(0.5) == Catch::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  // Gamma(21/2) from Gamma(1/2) by the recursion Gamma(x+1) = x Gamma(x).
  double acc = 0.5 * std::log(std::numbers::pi);
  for (double x = 0.5; x < 10.0; x += 1.0) acc += std::log(x);
  CHECK(log_gamma(10.5) == Catch::Approx(acc).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), domain_error);

  using big = boost::multiprecision::cpp_bin_float_50;
  double worst = 0.0;
  for (double x = 0.013; x < 300.0; x *= 1.37) {
    const double ref = boost::math::lgamma(big(x)).convert_to<double>();
    if (std::abs(ref) > 1e-3) worst = std::max(worst, std::abs(log_gamma(x) - ref) / std::abs(ref));
  }
  CHECK(worst <= 1e-13);

  auto s = signed_log_gamma(-0.5);  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(s.sign == -1);
  CHECK(s.log_abs == Catch::Approx(std::log(2 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
  CHECK_THROWS_AS(signed_log_gamma(-2.0), domain_error);
}

TEST_CASE("spectral table serialization", "[spectra]") {
  auto table = spectral_table(CaseId::complex(1), 2);
  REQUIRE(table.size() == 6);
  auto j = to_json(table);
  CHECK(j[1]["case"] == "complex");
  CHECK(j[1]["label"] == nlohmann::json::array({1, 0}));
  CHECK(j[1]["nu"]["num"] == "1");
  CHECK(j[1]["exact"]["num"] == "3");
  CHECK(j[1]["deltab"] == 2);
  auto deg = to_json(spectral_table(CaseId::real(2), 1));
  CHECK(deg[1]["exact"].is_null());
}
