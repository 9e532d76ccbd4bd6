#pragma once

#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/exactpoly/harmonic.hpp"
#include "flagsob/geometry/horizontal.hpp"
#include "flagsob/rng.hpp"
#include "flagsob/spectra/eigenvalues.hpp"

#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace flagsob::inequalities {

using exactpoly::ComplexPoly;
using exactpoly::ComplexRational;
using exactpoly::Rational;
using exactpoly::RationalPoly;
using spectra::CaseId;
using spectra::Family;
using spectra::KTypeLabel;

/// One harmonic piece Y of a band-limited function, entering as weight * Y.
/// The polynomial is exact; the weight carries real multipliers such as
/// heat-semigroup factors and normalizations.
struct Component {
  std::optional<KTypeLabel> label;
  int degree = 0;
  ComplexPoly harmonic;
  double weight = 1.0;
  double norm_sq = 0.0;  // ||Y||_2^2 of the unweighted polynomial
};

namespace detail {

// E[x^gamma] on the unit sphere in R^D for the normalized measure.
class SphereMoments {
 public:
  explicit SphereMoments(std::size_t D) : D_(static_cast<double>(D)) {}

  double operator()(const exactpoly::Exponent& a, const exactpoly::Exponent& b) const {
    double num = 1.0;
    int half = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int e = a[i] + b[i];
      if (e % 2) return 0.0;
      for (int t = e - 1; t > 1; t -= 2) num *= t;
      half += e / 2;
    }
    double den = 1.0;
    for (int j = 0; j < half; ++j) den *= D_ + 2.0 * j;
    return num / den;
  }

 private:
  double D_;
};

inline double sphere_norm_sq(const ComplexPoly& p) {
  const SphereMoments mom(p.nvars());
  std::vector<std::pair<const exactpoly::Exponent*, std::complex<double>>> t;
  for (const auto& [e, c] : p.terms()) t.emplace_back(&e, exactpoly::CoefTraits<ComplexRational>::to_complex(c));
  double s = 0.0;
  for (const auto& [ea, ca] : t)
    for (const auto& [eb, cb] : t) s += (ca * std::conj(cb)).real() * mom(*ea, *eb);
  return s;
}

inline std::vector<exactpoly::ComplexPair> complex_pairs(std::size_t D) {
  std::vector<exactpoly::ComplexPair> pairs;
  for (std::size_t j = 0; j + 1 < D; j += 2) pairs.push_back({j, j + 1});
  return pairs;
}

inline std::map<int, ComplexPoly> homogeneous_parts(const ComplexPoly& p) {
  std::map<int, ComplexPoly> out;
  for (const auto& [e, c] : p.terms()) {
    const int d = exactpoly::exponent_degree(e);
    out.try_emplace(d, ComplexPoly(p.vars())).first->second.add_term(e, c);
  }
  return out;
}

}  // namespace detail

/// Value and ambient gradient (real and imaginary parts) at a point.
struct Jet {
  std::complex<double> value;
  std::vector<double> grad_re;
  std::vector<double> grad_im;
};

/// F = sum of harmonic components on the sphere of a rank-one case. Components
/// carry K-type labels in the real and complex cases; in the quaternionic and
/// octonionic cases they are labeled by degree only unless a label is given.
class BandLimitedFunction {
 public:
  BandLimitedFunction(CaseId c, std::vector<Component> comps) : case_(c), comps_(std::move(comps)) {
    const std::size_t D = static_cast<std::size_t>(case_.ambient_dim());
    vars_ = exactpoly::coordinate_names(D);
    for (auto& comp : comps_) validate(comp);
    compile();
  }

  static BandLimitedFunction constant(CaseId c, double value = 1.0) {
    const auto vars = exactpoly::coordinate_names(static_cast<std::size_t>(c.ambient_dim()));
    Component k;
    k.label = KTypeLabel{0, 0};
    k.harmonic = ComplexPoly::constant(vars, ComplexRational(1));
    k.weight = value;
    return BandLimitedFunction(c, {k});
  }

  /// Restriction of a polynomial in the ambient coordinates x1..xD to the
  /// sphere, split into harmonic pieces (and bidegrees in the complex case).
  static BandLimitedFunction from_polynomial(CaseId c, const ComplexPoly& p, const exactpoly::PolyCaps& caps = {}) {
    const std::size_t D = static_cast<std::size_t>(c.ambient_dim());
    const auto vars = exactpoly::coordinate_names(D);
    if (p.vars() != vars) throw structural_error("from_polynomial: expected variables x1..x" + std::to_string(D));
    std::map<int, ComplexPoly> by_degree;
    for (const auto& [d, part] : detail::homogeneous_parts(p))
      for (auto& h : exactpoly::harmonic_projection(part, vars, caps))
        by_degree.try_emplace(h.degree, ComplexPoly(vars)).first->second += h.harmonic;
    std::vector<Component> comps;
    for (auto& [d, h] : by_degree) {
      if (h.is_zero()) continue;
      if (c.family == Family::complex) {
        for (auto& [bd, piece] : exactpoly::bidegree_split(h, detail::complex_pairs(D))) {
          if (piece.is_zero()) continue;
          Component k;
          k.label = KTypeLabel{bd.first, bd.second};
          k.degree = d;
          k.harmonic = std::move(piece);
          comps.push_back(std::move(k));
        }
      } else {
        Component k;
        if (c.family == Family::real) k.label = KTypeLabel{d, 0};
        k.degree = d;
        k.harmonic = std::move(h);
        comps.push_back(std::move(k));
      }
    }
    if (comps.empty()) throw domain_error("from_polynomial: the polynomial vanishes on the sphere");
    return BandLimitedFunction(c, std::move(comps));
  }

  static BandLimitedFunction from_polynomial(CaseId c, const RationalPoly& p, const exactpoly::PolyCaps& caps = {}) {
    return from_polynomial(c, exactpoly::to_complex_poly(p), caps);
  }

  const CaseId& case_id() const { return case_; }
  const std::vector<Component>& components() const { return comps_; }
  std::size_t sphere_dim() const { return static_cast<std::size_t>(case_.sphere_dim()); }
  std::size_t ambient_dim() const { return vars_.size(); }
  bool labeled() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.label.has_value(); });
  }
  bool is_real_valued() const { return real_valued_; }
  int max_degree() const {
    int d = 0;
    for (const auto& c : comps_) d = std::max(d, c.degree);
    return d;
  }

  /// ||F||_2^2 = sum weight^2 ||Y||^2 (the components are orthogonal).
  double norm_sq() const {
    double s = 0.0;
    for (const auto& c : comps_) s += c.weight * c.weight * c.norm_sq;
    return s;
  }

  /// Same components with weights multiplied by m(component).
  template <class M>
  BandLimitedFunction with_multiplier(const M& m) const {
    BandLimitedFunction r = *this;
    for (auto& c : r.comps_) c.weight *= m(c);
    return r;
  }

  BandLimitedFunction scaled(double s) const {
    return with_multiplier([s](const Component&) { return s; });
  }

  BandLimitedFunction normalized() const {
    const double n2 = norm_sq();
    if (!(n2 > 0.0)) throw domain_error("normalized: zero function");
    return scaled(1.0 / std::sqrt(n2));
  }

  std::complex<double> value(std::span<const double> x) const {
    std::complex<double> v = 0.0;
    for (std::size_t i = 0; i < comps_.size(); ++i) v += comps_[i].weight * compiled_[i].value(x);
    return v;
  }

  void jet(std::span<const double> x, Jet& out) const {
    const std::size_t D = vars_.size();
    out.value = 0.0;
    out.grad_re.assign(D, 0.0);
    out.grad_im.assign(D, 0.0);
    thread_local std::vector<double> gr, gi;
    gr.resize(D);
    gi.resize(D);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      const double w = comps_[i].weight;
      out.value += w * compiled_[i].value_and_gradient(x, gr, gi);
      for (std::size_t a = 0; a < D; ++a) {
        out.grad_re[a] += w * gr[a];
        out.grad_im[a] += w * gi[a];
      }
    }
  }

 private:
  void validate(Component& c) const {
    if (c.harmonic.vars() != vars_) throw structural_error("BandLimitedFunction: component must use variables x1..xD");
    if (c.harmonic.is_zero()) throw domain_error("BandLimitedFunction: zero component");
    std::vector<std::size_t> dims(vars_.size());
    std::iota(dims.begin(), dims.end(), 0);
    if (!c.harmonic.is_homogeneous_in(dims)) throw domain_error("BandLimitedFunction: component is not homogeneous");
    c.degree = c.harmonic.degree();
    if (!exactpoly::euclidean_laplacian(c.harmonic, std::span<const std::size_t>(dims)).is_zero())
      throw domain_error("BandLimitedFunction: component is not harmonic");
    if (c.label) {
      spectra::validate(case_, *c.label);
      if (spectra::degree(case_, *c.label) != c.degree)
        throw domain_error("BandLimitedFunction: label " + spectra::label_string(*c.label) + " does not match degree " +
                           std::to_string(c.degree));
      if (case_.family == Family::complex) {
        const auto split = exactpoly::bidegree_split(c.harmonic, detail::complex_pairs(vars_.size()));
        if (split.size() != 1 || split.begin()->first != std::pair{c.label->first, c.label->second})
          throw domain_error("BandLimitedFunction: component is not of pure bidegree " +
                             spectra::label_string(*c.label));
      }
    }
    c.norm_sq = detail::sphere_norm_sq(c.harmonic);
  }

  void compile() {
    compiled_.clear();
    real_valued_ = true;
    for (const auto& c : comps_) {
      compiled_.emplace_back(c.harmonic);
      real_valued_ = real_valued_ && compiled_.back().is_real();
    }
  }

  CaseId case_;
  std::vector<Component> comps_;
  std::vector<std::string> vars_;
  std::vector<exactpoly::CompiledComplexPoly> compiled_;
  bool real_valued_ = true;
};

namespace detail {

inline Rational random_coefficient(Rng& rng) {
  return Rational(static_cast<long long>(rng.below(2001)) - 1000, 1000);
}

// Harmonic part of a random monomial of degree k in x1..xD.
inline ComplexPoly random_real_harmonic(std::size_t D, int k, Rng& rng) {
  const auto vars = exactpoly::coordinate_names(D);
  for (;;) {
    exactpoly::Exponent e(D, 0);
    for (int i = 0; i < k; ++i) ++e[rng.below(D)];
    const auto h = exactpoly::harmonic_projection(ComplexPoly::monomial(vars, e, ComplexRational(1)), vars);
    if (!h.empty() && h.front().degree == k) return h.front().harmonic;
  }
}

// Harmonic part of a random z^a zbar^b with |a| = p, |b| = q, z_j = x_{2j-1} + i x_{2j}.
inline ComplexPoly random_bidegree_harmonic(std::size_t D, int p, int q, Rng& rng) {
  const auto vars = exactpoly::coordinate_names(D);
  const std::size_t m = D / 2;
  const ComplexRational i = ComplexRational::i();
  for (;;) {
    ComplexPoly mono = ComplexPoly::constant(vars, ComplexRational(1));
    for (int s = 0; s < p + q; ++s) {
      const std::size_t j = rng.below(m);
      const ComplexPoly x = ComplexPoly::variable(vars, vars[2 * j]), y = ComplexPoly::variable(vars, vars[2 * j + 1]);
      mono = mono * (s < p ? x + y * i : x - y * i);
    }
    const auto h = exactpoly::harmonic_projection(mono, vars);
    if (!h.empty() && h.front().degree == p + q) return h.front().harmonic;
  }
}

}  // namespace detail

/// Random test function: for every K-type up to max_degree a coefficient
/// uniform in [-1, 1] (step 1/1000) times a random element of that K-type
/// (harmonic projection of a random monomial; in the quaternionic and
/// octonionic cases a random harmonic of the right degree), renormalized to
/// ||F||_2 = 1. Pieces of equal label are merged.
inline BandLimitedFunction random_band_limited(const CaseId& c, int max_degree, std::uint64_t seed) {
  const std::size_t D = static_cast<std::size_t>(c.ambient_dim());
  const auto vars = exactpoly::coordinate_names(D);
  Rng rng(seed, 0x62616e64);
  std::map<std::pair<int, int>, Component> merged;
  for (const auto& l : spectra::enumerate_ktypes(c, max_degree)) {
    const int k = spectra::degree(c, l);
    const ComplexRational coef(detail::random_coefficient(rng));
    ComplexPoly h(vars);
    std::optional<KTypeLabel> label;
    switch (c.family) {
      case Family::real:
        h = detail::random_real_harmonic(D, k, rng);
        label = l;
        break;
      case Family::complex:
        h = detail::random_bidegree_harmonic(D, l.first, l.second, rng);
        label = l;
        break;
      default: h = detail::random_real_harmonic(D, k, rng); break;
    }
    h *= coef;
    const auto key = label ? std::pair{label->first, label->second} : std::pair{k, -1};
    auto [it, fresh] = merged.try_emplace(key);
    if (fresh) {
      it->second.label = label;
      it->second.harmonic = std::move(h);
    } else {
      it->second.harmonic += h;
    }
  }
  std::vector<Component> comps;
  for (auto& [key, comp] : merged)
    if (!comp.harmonic.is_zero()) comps.push_back(std::move(comp));
  return BandLimitedFunction(c, std::move(comps)).normalized();
}

}  // namespace flagsob::inequalities
