#include "flagsob/flagsob.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

namespace {

using namespace flagsob;
using inequalities::InequalityReport;
using nlohmann::json;
using quadrature::Kind;
using quadrature::QuadratureSpec;
using spectra::CaseId;

constexpr int exit_ok = 0, exit_usage = 1, exit_violation = 2, exit_numeric = 3;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;
  std::string case_name = "real";
  int n = 0;
  int k = 1;
  int max_degree = 4;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;
  std::string grid = "small";
  int length = 8;
  double p = 0.0;
  double q = 0.0;
  double t = -1.0;
  double scale = 1.0;
  std::string format = "json";
  double tolerance = 1e-9;
  std::string output;

  json echo() const {
    json j = {{"command", command}, {"case", case_name}, {"n", n},          {"max_degree", max_degree},
              {"samples", samples}, {"trials", trials},  {"format", format}, {"tolerance", tolerance}};
    if (!target.empty()) j["target"] = target;
    if (seed) j["seed"] = *seed;
    return j;
  }

  std::uint64_t require_seed() const {
    if (!seed) throw usage_error("a seed is required: pass --seed or set FLAGSOB_SEED");
    return *seed;
  }
  std::uint64_t seed_or_default() const { return seed.value_or(1); }
  std::size_t trials_or(std::size_t d) const { return trials ? trials : d; }
  std::size_t samples_or(std::size_t d) const { return samples ? samples : d; }
};

std::uint64_t function_seed(std::uint64_t seed, std::size_t i) { return splitmix64(seed) + i; }
std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) { return splitmix64(seed ^ 0x73616d706c65ULL) + i; }

CaseId make_case(const RunConfig& c, int default_n) {
  return CaseId(spectra::parse_family(c.case_name), c.n > 0 ? c.n : default_n);
}

struct Outcome {
  std::vector<InequalityReport> reports;
  std::vector<bool> pass;
  json extra = json::object();

  void add(InequalityReport r, bool ok) {
    reports.push_back(std::move(r));
    pass.push_back(ok);
  }
  bool all_pass() const { return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; }); }
};

// margin >= -(3 std_error + tolerance max(1, |rhs|)).
void add_checked(Outcome& o, InequalityReport r, const RunConfig& c) {
  const bool ok = r.passes(3.0, c.tolerance);
  o.add(std::move(r), ok);
}

InequalityReport identity_report(std::string suite, std::string label, double lhs, double rhs) {
  InequalityReport r;
  r.suite = std::move(suite);
  r.case_name = "identity";
  r.label = std::move(label);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  return r;
}

std::string label_for(std::size_t i) { return "trial " + std::to_string(i); }

Outcome verify_sphere(const RunConfig& c, const std::string& target) {
  const std::uint64_t seed = c.require_seed();
  Outcome o;
  if (target == "theorem21" || target == "beckner") {
    const CaseId cs = make_case(c, c.case_name == "real" ? 2 : 1);
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      const auto f = inequalities::random_band_limited(cs, c.max_degree, function_seed(seed, i));
      const auto spec = QuadratureSpec::monte_carlo(c.samples_or(200000), sample_seed(seed, i));
      auto r = target == "theorem21" ? inequalities::verify_theorem21(f, spec) : inequalities::beckner_bound_check(f, spec);
      r.label = label_for(i);
      add_checked(o, std::move(r), c);
    }
  } else if (target == "semigroup") {
    const CaseId cs = make_case(c, c.case_name == "real" ? 2 : 1);
    const double q = c.q > 0 ? c.q : 2.0, p = c.p > 0 ? c.p : 4.0;
    const double t = c.t >= 0 ? c.t : inequalities::contraction_threshold(cs, q, p);
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      const auto f = inequalities::random_band_limited(cs, c.max_degree, function_seed(seed, i));
      auto r = inequalities::semigroup_contraction_check(f, t, q, p,
                                                         QuadratureSpec::monte_carlo(c.samples_or(200000), sample_seed(seed, i)));
      r.label = label_for(i);
      add_checked(o, std::move(r), c);
    }
  } else if (target == "hls") {
    if (c.case_name != "real") throw usage_error("hls: only the real case is supported");
    const CaseId cs = make_case(c, 3);
    const double p = c.p > 0 ? c.p : 1.5;
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      const auto f = inequalities::random_band_limited(cs, c.max_degree, function_seed(seed, i));
      auto r = inequalities::hls_contraction_check(f, p, QuadratureSpec::monte_carlo(c.samples_or(200000), sample_seed(seed, i)));
      r.label = label_for(i);
      add_checked(o, std::move(r), c);
    }
  } else if (target == "heisenberg") {
    const int n = c.n > 0 ? c.n : 1;
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      const auto F = inequalities::random_band_limited(CaseId::complex(n), std::min(c.max_degree, 2), function_seed(seed, i));
      auto r = gauss_limit::heisenberg_logsob_check(gauss_limit::cayley_pullback(F),
                                                    QuadratureSpec::monte_carlo(c.samples_or(100000), sample_seed(seed, i)));
      r.label = label_for(i);
      add_checked(o, std::move(r), c);
    }
  }
  return o;
}

Outcome verify_gaussian(const RunConfig& c, const std::string& target) {
  Outcome o;
  if (target == "gross") {
    const int k = c.n > 0 ? c.n : 1;
    if (k > 4) throw usage_error("gross: dimension must be at most 4");
    const std::uint64_t seed = c.seed_or_default();
    const std::size_t nodes = k <= 2 ? 40 : (k == 3 ? 24 : 12);
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      Rng rng(function_seed(seed, i), 0);
      const auto f = acceptance::detail::random_gross_poly(rng, static_cast<std::size_t>(k));
      const QuadratureSpec spec = c.samples ? QuadratureSpec::monte_carlo(c.samples, sample_seed(c.require_seed(), i))
                                            : QuadratureSpec{Kind::gauss_hermite, nodes};
      auto r = inequalities::gross_check(static_cast<std::size_t>(k), inequalities::SmoothFunction::from_polynomial(f), spec);
      r.label = label_for(i);
      const bool ok = c.samples ? r.passes(3.0, c.tolerance) : r.margin >= -1e-6;
      o.add(std::move(r), ok);
    }
  } else if (target == "projected") {
    const int n = c.n > 0 ? c.n : 50;
    const std::uint64_t seed = c.seed_or_default();
    for (std::size_t i = 0; i < c.trials_or(1); ++i) {
      Rng rng(function_seed(seed, i), 0);
      const auto f = inequalities::SmoothFunction::from_polynomial(
          acceptance::detail::random_gross_poly(rng, static_cast<std::size_t>(c.k)));
      const QuadratureSpec spec = c.samples ? QuadratureSpec::monte_carlo(c.samples, sample_seed(c.require_seed(), i))
                                            : QuadratureSpec{Kind::adaptive_radial, 16};
      auto r = gauss_limit::projected_inequality_check(static_cast<std::size_t>(c.k), n, f, spec);
      r.label = label_for(i);
      add_checked(o, std::move(r), c);
    }
  }
  return o;
}

Outcome verify_rearrangement(const RunConfig& c) {
  if (c.length < 1) throw usage_error("rearrangement: --length must be positive");
  const std::uint64_t seed = c.seed_or_default();
  Outcome o;
  for (std::size_t i = 0; i < c.trials_or(10000); ++i) {
    Rng rng(function_seed(seed, i), 0);
    const std::size_t len = 1 + i % static_cast<std::size_t>(c.length);
    std::vector<double> a(len), b(len);
    for (auto& e : a) e = static_cast<double>(rng.below(1001));
    for (auto& e : b) e = static_cast<double>(rng.below(1001));
    const auto re = inequalities::rearrangement_check(a, b);
    InequalityReport r = identity_report("rearrangement", label_for(i), re.Q, re.Q_star);
    r.case_name = "sequences";
    r.n = static_cast<int>(len);
    r.seed = seed;
    bool ok = re.Q_star >= re.Q;
    if (len <= 8) {
      std::vector<std::size_t> perm(len);
      std::iota(perm.begin(), perm.end(), 0);
      double best = 0.0;
      do {
        double s = 0.0;
        for (std::size_t j = 0; j < len; ++j) s += a[j] * b[perm[j]];
        best = std::max(best, s);
      } while (std::next_permutation(perm.begin(), perm.end()));
      r.metadata["exhaustive_max"] = best;
      ok = ok && best == re.Q_star;
    }
    o.add(std::move(r), ok);
  }
  return o;
}

Outcome verify_lemma(const RunConfig& c) {
  if (c.grid != "small" && c.grid != "full") throw usage_error("lemma: --grid must be small or full");
  const bool full = c.grid == "full";
  const std::vector<double> Ns = full ? std::vector<double>{0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4, 4.5, 5, 5.5, 6}
                                      : std::vector<double>{1, 2, 3, 4, 5, 6};
  const std::vector<double> ns = full ? std::vector<double>{0.5, 1.0, 3.0, 10.0} : std::vector<double>{1.0, 3.5};
  const std::vector<double> xs = full ? std::vector<double>{0.0, 0.25, 1.0, 2.5, 4.0} : std::vector<double>{0.0, 1.0, 4.0};
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (double N : Ns) {
      if (2.0 * N <= m) continue;
      for (double n : ns)
        for (double x2 : xs) {
          const double q = quadrature::integrate_weighted_rn(
                               static_cast<std::size_t>(m), n, -N,
                               [&](std::span<const double> y) {
                                 double y2 = 0.0;
                                 for (double e : y) y2 += e * e;
                                 return std::pow(1.0 + x2 / (n + y2), -N);
                               },
                               {Kind::adaptive_radial, 3})
                               .value;
          const double v = gauss_limit::lemma_closed_form(m, N, n, x2);
          std::ostringstream label;
          label << "m=" << m << " N=" << N << " n=" << n << " x2=" << x2;
          auto r = identity_report("lemma", label.str(), std::abs(v - q), 1e-8 * (1.0 + std::abs(v)));
          r.n = m;
          r.metadata = {{"closed_form", v}, {"quadrature", q}};
          const bool ok = r.lhs <= r.rhs;
          o.add(std::move(r), ok);
        }
    }
  return o;
}

Outcome verify_constants(const RunConfig& c) {
  const int top = c.n > 0 ? c.n : 8;
  if (top > 8) throw usage_error("constants: --n must be at most 8");
  const QuadratureSpec spec{Kind::adaptive_radial, 1};
  const auto one = [](std::span<const double>) { return 1.0; };
  Outcome o;
  auto add = [&](const std::string& label, int n, double value) {
    auto r = identity_report("constants", label, std::abs(value - 1.0), 5e-3);
    r.n = n;
    r.metadata["normalized_mass"] = value;
    const bool ok = r.lhs <= r.rhs;
    o.add(std::move(r), ok);
  };
  for (int n = 1; n <= top; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    add("c'_n", n, std::exp(gauss_limit::log_c_prime(n)) * quadrature::integrate_weighted_rn(nn, n, -n, one, spec).value);
    add("heisenberg c'_n", n,
        gauss_limit::heisenberg_constant(n) * quadrature::integrate_heisenberg_mu(nn, one, spec).value);
    for (int k = 1; k <= 3 && k < n; ++k)
      add("d'_{n,k} k=" + std::to_string(k), n,
          gauss_limit::limit_constants(n, k).d_prime() *
              quadrature::integrate_weighted_rn(static_cast<std::size_t>(k), n, -0.5 * (n + k), one, spec).value);
  }
  return o;
}

Outcome verify_asymptotics(const RunConfig& c) {
  const int top = c.n > 0 ? c.n : 1000000;
  std::vector<int> ns;
  for (int n = 10; n < top; n *= 10) ns.push_back(n);
  ns.push_back(top);
  Outcome o;
  json tables = json::array();
  for (int k = 1; k <= 3; ++k) {
    const auto t = gauss_limit::asymptotics_check(k, ns);
    json rows = json::array();
    for (const auto& row : t.rows)
      rows.push_back({{"n", row.n}, {"d_prime", row.d_prime_deviation}, {"d_tilde_prime_over_4", row.d_tilde_prime_deviation}});
    tables.push_back({{"k", k}, {"rows", rows}, {"envelope_constant", t.envelope_constant}});
    const auto& last = t.rows.back();
    for (const auto& [name, dev] : {std::pair{"d'(2pi)^{k/2} - 1", last.d_prime_deviation},
                                    std::pair{"(d~'/4)(2pi)^{k/2} - 1", last.d_tilde_prime_deviation}}) {
      auto r = identity_report("asymptotics", std::string(name) + " k=" + std::to_string(k), std::abs(dev), 1e-4);
      r.n = last.n;
      r.metadata["deviation"] = dev;
      const bool ok = r.lhs <= r.rhs;
      o.add(std::move(r), ok);
    }
  }
  o.extra["tables"] = tables;
  return o;
}

Outcome run_verify(const RunConfig& c) {
  const std::string& t = c.target;
  if (t == "theorem21" || t == "beckner" || t == "semigroup" || t == "hls" || t == "heisenberg")
    return verify_sphere(c, t);
  if (t == "gross" || t == "projected") return verify_gaussian(c, t);
  if (t == "rearrangement") return verify_rearrangement(c);
  if (t == "lemma") return verify_lemma(c);
  if (t == "constants") return verify_constants(c);
  if (t == "asymptotics") return verify_asymptotics(c);
  throw usage_error("unknown verify target '" + t + "'");
}

std::string text_report(const InequalityReport& r, bool pass) {
  std::ostringstream os;
  os.precision(10);
  os << r.suite << " " << r.case_name;
  if (r.n) os << " n=" << r.n;
  os << " [" << r.label << "] lhs=" << r.lhs << " rhs=" << r.rhs << " margin=" << r.margin;
  if (r.std_error > 0) os << " +- " << r.std_error;
  os << (pass ? " PASS" : " FAIL");
  return os.str();
}

std::string render_verify(const RunConfig& c, const Outcome& o, double seconds) {
  std::ostringstream os;
  if (c.format == "csv") {
    os << inequalities::csv_header() << "\n";
    for (std::size_t i = 0; i < o.reports.size(); ++i) os << inequalities::csv_row(o.reports[i], o.pass[i]) << "\n";
  } else if (c.format == "text") {
    for (std::size_t i = 0; i < o.reports.size(); ++i) os << text_report(o.reports[i], o.pass[i]) << "\n";
    os << (o.all_pass() ? "PASS" : "FAIL") << " (" << o.reports.size() << " checks)\n";
  } else {
    json reports = json::array();
    for (std::size_t i = 0; i < o.reports.size(); ++i) {
      json r = o.reports[i];
      r["pass"] = static_cast<bool>(o.pass[i]);
      reports.push_back(std::move(r));
    }
    json doc = {{"version", flagsob::version}, {"config", c.echo()}, {"reports", reports}, {"pass", o.all_pass()}};
    if (!o.extra.empty()) doc["extra"] = o.extra;
    doc["timing"] = {{"seconds", seconds}};
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render_spectra(const RunConfig& c, const CaseId& cs, bool& ok) {
  const auto table = spectra::spectral_table(cs, c.max_degree);
  ok = true;
  json rows = json::array();
  std::ostringstream body;
  if (c.format == "csv") body << "case,n,label,source,approx,deltab,bound_margin,equality,identity\n";
  for (const auto& rec : table) {
    const auto id = spectra::special_nu_identity(cs, rec.label);
    const bool identity = id.holds();
    const bool margin_ok = rec.bound_margin >= 0;
    const bool eq = spectra::in_equality_set(cs, rec.label);
    ok = ok && identity && margin_ok;
    const std::string status = id.degenerate ? "degenerate" : (identity ? "holds" : "fails");
    const std::string margin = exactpoly::numerator_string(rec.bound_margin) + "/" +
                               exactpoly::denominator_string(rec.bound_margin);
    if (c.format == "csv") {
      body.precision(17);
      body << spectra::to_string(cs.family) << "," << cs.n << "," << csv_field(spectra::label_string(rec.label)) << ","
           << spectra::to_string(rec.value.source) << "," << rec.value.approx << "," << rec.deltab << "," << margin
           << "," << (eq ? "true" : "false") << "," << status << "\n";
    } else if (c.format == "text") {
      body.precision(10);
      body << spectra::label_string(rec.label) << " eigenvalue=" << rec.value.approx << " deltab=" << rec.deltab
           << " bound_margin=" << margin << (eq ? " equality" : "") << " identity=" << status;
      if (id.degenerate) body << " (" << id.note << ")";
      body << "\n";
    } else {
      json r = spectra::to_json(rec);
      r["equality"] = eq;
      r["identity"] = {{"status", status}};
      if (id.degenerate) r["identity"]["note"] = id.note;
      rows.push_back(std::move(r));
    }
  }
  if (c.format == "json") {
    json doc = {{"version", flagsob::version}, {"config", c.echo()}, {"case", cs.name()}, {"records", rows}, {"pass", ok}};
    return doc.dump(2) + "\n";
  }
  if (c.format == "text") body << cs.name() << ": " << (ok ? "PASS" : "FAIL") << " (" << table.size() << " labels)\n";
  return body.str();
}

int run_report(const RunConfig& c, std::string& out) {
  acceptance::AcceptanceConfig cfg;
  if (c.seed) cfg.seed = *c.seed;
  cfg.scale = c.scale;
  const auto start = std::chrono::steady_clock::now();
  json suites = json::array(), times = json::object();
  bool pass = true, errored = false;
  std::ostringstream body;
  if (c.format == "csv") body << inequalities::csv_header() << "\n";
  for (const auto& criterion : acceptance::criteria()) {
    const auto r = criterion(cfg);
    pass = pass && r.passed;
    errored = errored || r.errored;
    suites.push_back(r);
    times["criterion " + std::to_string(r.id)] = r.seconds;
    if (c.format == "csv") {
      InequalityReport row;
      row.suite = "criterion";
      row.case_name = r.name;
      row.n = r.id;
      row.label = "summary";
      row.seed = cfg.seed;
      body << inequalities::csv_row(row, r.passed) << "\n";
      for (const auto& rep : r.reports) body << inequalities::csv_row(rep, rep.passes()) << "\n";
    } else if (c.format == "text") {
      body << acceptance::summary_line(r) << "\n";
    }
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.format == "json") {
    times["total"] = total;
    json doc = {{"version", flagsob::version},
                {"config", {{"command", "report"}, {"seed", cfg.seed}, {"scale", cfg.scale}}},
                {"suites", suites},
                {"pass", pass},
                {"timing", times}};
    out = doc.dump(2) + "\n";
  } else {
    out = body.str();
  }
  return errored ? exit_numeric : (pass ? exit_ok : exit_violation);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw usage_error("cannot open output file '" + c.output + "'");
  f << text;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--seed", c.seed, "Random seed (default: $FLAGSOB_SEED)");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--output", c.output, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Numerical verification of sharp log-Sobolev inequalities on spheres and the Heisenberg group"};
  app.require_subcommand(1);
  const std::vector<std::string> cases{"real", "complex", "quaternionic", "octonionic"};

  auto* spectra_cmd = app.add_subcommand("spectra", "Eigenvalue table, bound margins and special-parameter identities");
  spectra_cmd->add_option("--case", c.case_name, "real|complex|quaternionic|octonionic")->check(CLI::IsMember(cases));
  spectra_cmd->add_option("--n", c.n, "Rank parameter")->check(CLI::PositiveNumber);
  spectra_cmd->add_option("--max-degree", c.max_degree, "Largest degree")->check(CLI::NonNegativeNumber);
  add_common(spectra_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "Run one verifier");
  verify_cmd
      ->add_option("target", c.target,
                   "theorem21|beckner|gross|heisenberg|projected|semigroup|hls|rearrangement|lemma|constants|asymptotics")
      ->required()
      ->check(CLI::IsMember({"theorem21", "beckner", "gross", "heisenberg", "projected", "semigroup", "hls",
                             "rearrangement", "lemma", "constants", "asymptotics"}));
  verify_cmd->add_option("--case", c.case_name, "real|complex|quaternionic|octonionic")->check(CLI::IsMember(cases));
  verify_cmd->add_option("--n", c.n, "Rank parameter or dimension")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k", c.k, "Projected dimension")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-degree", c.max_degree, "Largest degree of random test functions")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", c.trials, "Number of trials")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--grid", c.grid, "Lemma grid")->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_option("--length", c.length, "Largest sequence length")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--p", c.p, "Exponent p");
  verify_cmd->add_option("--q", c.q, "Exponent q");
  verify_cmd->add_option("--t", c.t, "Semigroup time (default: threshold)");
  verify_cmd->add_option("--tolerance", c.tolerance, "Slack relative to max(1, |rhs|)")->check(CLI::PositiveNumber);
  add_common(verify_cmd, c);

  auto* report_cmd = app.add_subcommand("report", "Run the full acceptance suite");
  report_cmd->add_option("--scale", c.scale, "Multiplier for trial and sample counts")->check(CLI::PositiveNumber);
  add_common(report_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return exit_usage;
  }

  try {
    if (!c.seed)
      if (const char* env = std::getenv("FLAGSOB_SEED")) {
        try {
          c.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw usage_error("FLAGSOB_SEED must be a nonnegative integer");
        }
      }
    const auto start = std::chrono::steady_clock::now();
    if (spectra_cmd->parsed()) {
      c.command = "spectra";
      const CaseId cs = make_case(c, c.case_name == "real" ? 3 : 1);
      bool ok = true;
      emit(c, render_spectra(c, cs, ok));
      return ok ? exit_ok : exit_violation;
    }
    if (verify_cmd->parsed()) {
      c.command = "verify";
      const Outcome o = run_verify(c);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(c, render_verify(c, o, seconds));
      return o.all_pass() ? exit_ok : exit_violation;
    }
    c.command = "report";
    std::string text;
    const int code = run_report(c, text);
    emit(c, text);
    return code;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const flagsob::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  }
}
