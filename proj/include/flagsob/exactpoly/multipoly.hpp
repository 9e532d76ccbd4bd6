#pragma once

#include "flagsob/error.hpp"
#include "flagsob/exactpoly/rational.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagsob::exactpoly {

/// Exponent vector; one entry per variable of the owning polynomial.
using Exponent = std::vector<std::uint16_t>;

inline int exponent_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Multivariate polynomial with exact coefficients over an ordered list of
/// named variables. Zero coefficients are never stored.
template <class Coef>
class MultiPoly {
 public:
  using Coefficient = Coef;
  using Terms = std::map<Exponent, Coef>;
  using Traits = CoefTraits<Coef>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, Coef c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), std::move(c));
    return p;
  }

  static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponent e(p.nvars(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(std::move(e), Coef(1));
    return p;
  }

  static MultiPoly monomial(std::vector<std::string> vars, Exponent e, Coef c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.nvars()) throw structural_error("monomial: exponent length does not match variable count");
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw structural_error("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(const Exponent& e, const Coef& c) {
    if (e.size() != nvars()) throw structural_error("add_term: exponent length does not match variable count");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coef coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
  }

  /// Degree counted only in the given variable indices; -1 for zero.
  int degree_in(std::span<const std::size_t> idx) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, partial_degree(e, idx));
    return d;
  }

  bool is_homogeneous_in(std::span<const std::size_t> idx) const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int k = partial_degree(e, idx);
      if (d == -2) d = k;
      else if (k != d) return false;
    }
    return true;
  }

  bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return Traits::is_real(t.second); });
  }

  MultiPoly conj() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Traits::conj(c));
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Coef& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const Coef& s) { return a *= s; }
  friend MultiPoly operator*(const Coef& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    MultiPoly r(a.vars_);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(vars_, Coef(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return r;
  }

  /// Floating-point evaluation at a real point (one coordinate per variable).
  std::complex<double> evaluate(std::span<const double> x) const {
    if (x.size() != nvars()) throw structural_error("evaluate: point dimension does not match variable count");
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      double m = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      s += Traits::to_complex(c) * m;
    }
    return s;
  }

  void require_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw structural_error("polynomial variable lists differ");
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*" << p.vars_[i];
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os;
  }

 private:
  static int partial_degree(const Exponent& e, std::span<const std::size_t> idx) {
    int k = 0;
    for (std::size_t i : idx) k += e[i];
    return k;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using RationalPoly = MultiPoly<Rational>;
using ComplexPoly = MultiPoly<ComplexRational>;

inline ComplexPoly to_complex_poly(const RationalPoly& p) {
  ComplexPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, ComplexRational(c));
  return r;
}

inline RationalPoly real_part(const ComplexPoly& p) {
  RationalPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.re);
  return r;
}

inline RationalPoly imag_part(const ComplexPoly& p) {
  RationalPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.im);
  return r;
}

/// Symbols x1..xd.
inline std::vector<std::string> coordinate_names(std::size_t d, const std::string& stem = "x") {
  std::vector<std::string> v;
  v.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

template <class Coef>
MultiPoly<Coef> differentiate(const MultiPoly<Coef>& p, std::size_t var) {
  if (var >= p.nvars()) throw structural_error("differentiate: variable index out of range");
  MultiPoly<Coef> r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * Coef(Rational(e[var])));
  }
  return r;
}

template <class Coef>
MultiPoly<Coef> differentiate(const MultiPoly<Coef>& p, const std::string& var) {
  return differentiate(p, p.index_of(var));
}

template <class Coef>
std::vector<std::size_t> indices_of(const MultiPoly<Coef>& p, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& n : names) idx.push_back(p.index_of(n));
  return idx;
}

/// Sum of pure second partials over `dims`.
template <class Coef>
MultiPoly<Coef> euclidean_laplacian(const MultiPoly<Coef>& p, std::span<const std::size_t> dims) {
  MultiPoly<Coef> r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i : dims) {
      if (e[i] < 2) continue;
      Exponent f = e;
      f[i] = static_cast<std::uint16_t>(f[i] - 2);
      r.add_term(f, c * Coef(Rational(e[i] * (e[i] - 1))));
    }
  }
  return r;
}

template <class Coef>
MultiPoly<Coef> euclidean_laplacian(const MultiPoly<Coef>& p, const std::vector<std::string>& dims) {
  auto idx = indices_of(p, dims);
  return euclidean_laplacian(p, std::span<const std::size_t>(idx));
}

/// |x|^2 over the given variable indices.
template <class Coef>
MultiPoly<Coef> radius_squared(const std::vector<std::string>& vars, std::span<const std::size_t> dims) {
  MultiPoly<Coef> r(vars);
  for (std::size_t i : dims) {
    Exponent e(vars.size(), 0);
    e[i] = 2;
    r.add_term(e, Coef(1));
  }
  return r;
}

/// Substitute variable i of `p` by `images[i]`; all images share one target
/// variable list, which becomes the variable list of the result.
template <class Coef>
MultiPoly<Coef> compose(const MultiPoly<Coef>& p, const std::vector<MultiPoly<Coef>>& images) {
  if (images.size() != p.nvars()) throw structural_error("compose: need one image per variable");
  if (images.empty()) return p;
  const auto& target = images.front().vars();
  for (const auto& im : images)
    if (im.vars() != target) throw structural_error("compose: images must share a variable list");

  // Cache powers of each image.
  std::vector<std::vector<MultiPoly<Coef>>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) powers[i].push_back(MultiPoly<Coef>::constant(target, Coef(1)));
  auto power = [&](std::size_t i, int k) -> const MultiPoly<Coef>& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };

  MultiPoly<Coef> r(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<Coef> term = MultiPoly<Coef>::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

}  // namespace flagsob::exactpoly
