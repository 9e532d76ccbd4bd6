#pragma once

#include "flagsob/error.hpp"

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace flagsob::geometry {

inline double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm_sq(std::span<const double> a) { return dot(a, a); }

/// Unit vector in R^{d+1}, a point of S^d.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<double> coords) : x_(std::move(coords)) {
    if (x_.size() < 2) throw structural_error("SpherePoint: need at least two coordinates");
    const double r2 = norm_sq(x_);
    if (!(std::abs(r2 - 1.0) <= 1e-12))
      throw domain_error("SpherePoint: |xi|^2 = " + std::to_string(r2) + " is not 1");
  }

  /// Scales a nonzero vector onto the sphere.
  static SpherePoint normalized(std::vector<double> v) {
    const double r = std::sqrt(norm_sq(v));
    if (!(r > 0.0) || !std::isfinite(r)) throw domain_error("SpherePoint::normalized: zero or non-finite vector");
    for (double& c : v) c /= r;
    return SpherePoint(std::move(v));
  }

  /// d for S^d.
  std::size_t dim() const { return x_.size() - 1; }
  std::size_t ambient_dim() const { return x_.size(); }
  std::span<const double> coords() const { return x_; }
  double operator[](std::size_t i) const { return x_[i]; }

  void renormalize() {
    const double r = std::sqrt(norm_sq(x_));
    for (double& c : x_) c /= r;
  }

 private:
  std::vector<double> x_;
};

/// (xi, xi_{n+1}) = (2x, 1 - |x|^2) / (1 + |x|^2).
inline SpherePoint stereographic_inverse(std::span<const double> x) {
  const double r2 = norm_sq(x);
  std::vector<double> xi(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) xi[i] = 2.0 * x[i] / (1.0 + r2);
  xi.back() = (1.0 - r2) / (1.0 + r2);
  return SpherePoint::normalized(std::move(xi));
}

/// x = xi / (1 + xi_{n+1}); undefined at the south pole.
inline std::vector<double> stereographic(const SpherePoint& p) {
  const auto c = p.coords();
  const double den = 1.0 + c.back();
  if (!(den > 0.0)) throw domain_error("stereographic: south pole has no image");
  std::vector<double> x(c.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = c[i] / den;
  return x;
}

/// 1 + xi_{n+1} = 2 / (1 + |x|^2).
inline double conformal_factor(std::span<const double> x) { return 2.0 / (1.0 + norm_sq(x)); }

}  // namespace flagsob::geometry
