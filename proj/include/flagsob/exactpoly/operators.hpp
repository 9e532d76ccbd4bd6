#pragma once

#include "flagsob/exactpoly/multipoly.hpp"

#include <string>
#include <vector>

namespace flagsob::exactpoly {

/// The vector field sum_i c_i(x) d/dx_i with polynomial coefficients.
template <class Coef>
class FirstOrderOperator {
 public:
  explicit FirstOrderOperator(std::vector<MultiPoly<Coef>> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) return;
    for (const auto& c : coeffs_)
      if (c.vars() != coeffs_.front().vars())
        throw structural_error("FirstOrderOperator: coefficients must share a variable list");
    if (coeffs_.size() != coeffs_.front().nvars())
      throw structural_error("FirstOrderOperator: need one coefficient per variable");
  }

  /// The zero field on `vars`.
  static FirstOrderOperator zero(const std::vector<std::string>& vars) {
    return FirstOrderOperator(std::vector<MultiPoly<Coef>>(vars.size(), MultiPoly<Coef>(vars)));
  }

  /// d/d(name).
  static FirstOrderOperator partial(const std::vector<std::string>& vars, const std::string& name) {
    FirstOrderOperator op = zero(vars);
    std::size_t i = op.coeffs_.front().index_of(name);
    op.coeffs_[i] = MultiPoly<Coef>::constant(vars, Coef(1));
    return op;
  }

  const std::vector<MultiPoly<Coef>>& coefficients() const { return coeffs_; }
  const std::vector<std::string>& vars() const { return coeffs_.front().vars(); }

  MultiPoly<Coef> apply(const MultiPoly<Coef>& p) const {
    if (coeffs_.empty() || p.vars() != vars()) throw structural_error("apply_operator: variable lists differ");
    MultiPoly<Coef> r(p.vars());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      r += coeffs_[i] * differentiate(p, i);
    }
    return r;
  }

  MultiPoly<Coef> operator()(const MultiPoly<Coef>& p) const { return apply(p); }

  FirstOrderOperator& operator+=(const FirstOrderOperator& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend FirstOrderOperator operator+(FirstOrderOperator a, const FirstOrderOperator& b) { return a += b; }
  friend FirstOrderOperator operator*(const Coef& s, FirstOrderOperator a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  /// [V, W] as a first-order operator: coefficients V(w_i) - W(v_i).
  friend FirstOrderOperator commutator(const FirstOrderOperator& v, const FirstOrderOperator& w) {
    v.check(w);
    std::vector<MultiPoly<Coef>> c;
    c.reserve(v.coeffs_.size());
    for (std::size_t i = 0; i < v.coeffs_.size(); ++i) c.push_back(v.apply(w.coeffs_[i]) - w.apply(v.coeffs_[i]));
    return FirstOrderOperator(std::move(c));
  }

  friend bool operator==(const FirstOrderOperator& a, const FirstOrderOperator& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check(const FirstOrderOperator& o) const {
    if (coeffs_.size() != o.coeffs_.size() || (!coeffs_.empty() && vars() != o.vars()))
      throw structural_error("operators act on different variable lists");
  }

  std::vector<MultiPoly<Coef>> coeffs_;
};

template <class Coef>
MultiPoly<Coef> apply_operator(const FirstOrderOperator<Coef>& v, const MultiPoly<Coef>& p) {
  return v.apply(p);
}

}  // namespace flagsob::exactpoly
