#pragma once

#include "flagsob/exactpoly/multipoly.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace flagsob::exactpoly {

/// Double-precision evaluator for a real polynomial: sparse factor lists plus
/// a per-call power table. Used on hot quadrature paths.
class CompiledPoly {
 public:
  CompiledPoly() = default;

  explicit CompiledPoly(const RationalPoly& p) : nvars_(p.nvars()) {
    offsets_.push_back(0);
    for (const auto& [e, c] : p.terms()) {
      coef_.push_back(to_double(c));
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        factors_.push_back({static_cast<std::uint16_t>(i), e[i]});
        max_exp_ = std::max<int>(max_exp_, e[i]);
      }
      if (factors_.size() - offsets_.back() >= 32) throw domain_error("CompiledPoly: more than 31 variables in one term");
      offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
    }
  }

  std::size_t nvars() const { return nvars_; }
  bool empty() const { return coef_.empty(); }

  double value(std::span<const double> x) const {
    const double* pw = powers(x);
    double s = 0.0;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
      double m = coef_[t];
      for (std::uint32_t f = offsets_[t]; f < offsets_[t + 1]; ++f) m *= pw[index(factors_[f].var, factors_[f].exp)];
      s += m;
    }
    return s;
  }

  /// Returns the value and overwrites `grad` (size nvars) with the gradient.
  double value_and_gradient(std::span<const double> x, std::span<double> grad) const {
    const double* pw = powers(x);
    std::fill(grad.begin(), grad.end(), 0.0);
    double s = 0.0;
    std::array<double, 32> prefix{};
    for (std::size_t t = 0; t < coef_.size(); ++t) {
      const std::uint32_t lo = offsets_[t], hi = offsets_[t + 1];
      const std::uint32_t m = hi - lo;
      prefix[0] = coef_[t];
      for (std::uint32_t f = 0; f < m; ++f)
        prefix[f + 1] = prefix[f] * pw[index(factors_[lo + f].var, factors_[lo + f].exp)];
      s += prefix[m];
      double suffix = 1.0;
      for (std::uint32_t f = m; f-- > 0;) {
        const auto& fac = factors_[lo + f];
        grad[fac.var] += prefix[f] * suffix * fac.exp * pw[index(fac.var, fac.exp - 1)];
        suffix *= pw[index(fac.var, fac.exp)];
      }
    }
    return s;
  }

 private:
  struct Factor {
    std::uint16_t var;
    std::uint16_t exp;
  };

  std::size_t index(std::size_t var, int e) const { return var * static_cast<std::size_t>(max_exp_ + 1) + e; }

  const double* powers(std::span<const double> x) const {
    if (x.size() != nvars_) throw structural_error("CompiledPoly: point dimension mismatch");
    thread_local std::vector<double> pw;
    const std::size_t stride = static_cast<std::size_t>(max_exp_ + 1);
    pw.resize(nvars_ * stride);
    for (std::size_t v = 0; v < nvars_; ++v) {
      double* row = pw.data() + v * stride;
      row[0] = 1.0;
      for (std::size_t e = 1; e < stride; ++e) row[e] = row[e - 1] * x[v];
    }
    return pw.data();
  }

  std::size_t nvars_ = 0;
  int max_exp_ = 0;
  std::vector<double> coef_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Factor> factors_;
};

/// Complex-valued polynomial as a pair of compiled real polynomials.
class CompiledComplexPoly {
 public:
  CompiledComplexPoly() = default;
  explicit CompiledComplexPoly(const ComplexPoly& p)
      : re_(real_part(p)), im_(imag_part(p)), has_im_(!imag_part(p).is_zero()) {}
  explicit CompiledComplexPoly(const RationalPoly& p) : re_(p), im_(RationalPoly(p.vars())), has_im_(false) {}

  std::size_t nvars() const { return re_.nvars(); }
  bool is_real() const { return !has_im_; }

  std::complex<double> value(std::span<const double> x) const {
    return {re_.value(x), has_im_ ? im_.value(x) : 0.0};
  }

  /// Fills separate real/imaginary gradient vectors.
  std::complex<double> value_and_gradient(std::span<const double> x, std::span<double> grad_re,
                                          std::span<double> grad_im) const {
    double r = re_.value_and_gradient(x, grad_re);
    double i = 0.0;
    if (has_im_) i = im_.value_and_gradient(x, grad_im);
    else std::fill(grad_im.begin(), grad_im.end(), 0.0);
    return {r, i};
  }

 private:
  CompiledPoly re_;
  CompiledPoly im_;
  bool has_im_ = false;
};

}  // namespace flagsob::exactpoly
