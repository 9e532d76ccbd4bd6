#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace flagsob::quadrature {

/// Running sums of K per-sample quantities and their products, in a fixed
/// order so results are bit-reproducible. Sums are taken relative to the
/// first sample, so constant data has exactly zero spread.
class MomentAccumulator {
 public:
  explicit MomentAccumulator(std::size_t k) : k_(k), shift_(k, 0.0), sum_(k, 0.0), cross_(k * k, 0.0), d_(k) {}

  void add(std::span<const double> v) {
    if (n_ == 0) shift_.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k_));
    for (std::size_t a = 0; a < k_; ++a) d_[a] = v[a] - shift_[a];
    for (std::size_t a = 0; a < k_; ++a) {
      sum_[a] += d_[a];
      for (std::size_t b = a; b < k_; ++b) cross_[a * k_ + b] += d_[a] * d_[b];
    }
    ++n_;
  }

  std::size_t count() const { return n_; }
  std::size_t dim() const { return k_; }

  double mean(std::size_t a) const { return shift_[a] + sum_[a] / static_cast<double>(n_); }

  std::vector<double> means() const {
    std::vector<double> m(k_);
    for (std::size_t a = 0; a < k_; ++a) m[a] = mean(a);
    return m;
  }

  /// Covariance of the sample means (sample covariance / n).
  double mean_cov(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    const double n = static_cast<double>(n_);
    if (n_ < 2) return 0.0;
    const double c = (cross_[a * k_ + b] - sum_[a] * sum_[b] / n) / (n - 1.0);
    return c / n;
  }

  /// Standard error of g(means) by the delta method, given grad g.
  double delta_std_error(std::span<const double> grad) const {
    double v = 0.0;
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = 0; b < k_; ++b) v += grad[a] * grad[b] * mean_cov(a, b);
    return std::sqrt(std::max(v, 0.0));
  }

  double std_error(std::size_t a) const { return std::sqrt(std::max(mean_cov(a, a), 0.0)); }

 private:
  std::size_t k_;
  std::size_t n_ = 0;
  std::vector<double> shift_;
  std::vector<double> sum_;
  std::vector<double> cross_;
  std::vector<double> d_;
};

}  // namespace flagsob::quadrature
