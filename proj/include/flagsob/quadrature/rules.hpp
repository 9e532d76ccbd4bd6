#pragma once

#include "flagsob/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace flagsob::quadrature {

/// Nodes and weights of a 1-D rule; weights sum to 1 (probability measure).
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights the
// squared first components of the eigenvectors.
inline Rule1D golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag) {
  const auto m = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    J(i, i) = diag[static_cast<std::size_t>(i)];
    if (i + 1 < m) J(i, i + 1) = J(i + 1, i) = offdiag[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw numeric_error("golub_welsch: eigenproblem failed");
  Rule1D r;
  r.nodes.resize(static_cast<std::size_t>(m));
  r.weights.resize(static_cast<std::size_t>(m));
  double total = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    r.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.weights[static_cast<std::size_t>(i)] = v * v;
    total += v * v;
  }
  for (double& w : r.weights) w /= total;
  return r;
}

}  // namespace detail

/// m-point Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1],
/// normalized to total mass 1. Exact for polynomials of degree <= 2m-1.
inline Rule1D gauss_jacobi(std::size_t m, double alpha, double beta) {
  if (m < 1) throw structural_error("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw domain_error("gauss_jacobi: exponents must exceed -1");
  std::vector<double> diag(m), off(m > 1 ? m - 1 : 0);
  const double ab = alpha + beta;
  for (std::size_t k = 0; k < m; ++k) {
    const double s = 2.0 * static_cast<double>(k) + ab;
    if (alpha == beta) diag[k] = 0.0;
    else if (k == 0) diag[k] = (beta - alpha) / (ab + 2.0);
    else diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k < m; ++k) {
    const double kk = static_cast<double>(k), s = 2.0 * kk + ab;
    const double b = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    off[k - 1] = std::sqrt(b);
  }
  return detail::golub_welsch(diag, off);
}

/// m-point Gauss-Hermite rule for the standard normal density (probabilists'
/// Hermite recurrence, beta_k = k). Weights sum to 1.
inline Rule1D gauss_hermite(std::size_t m) {
  if (m < 1) throw structural_error("gauss_hermite: need at least one node");
  std::vector<double> diag(m, 0.0), off(m > 1 ? m - 1 : 0);
  for (std::size_t k = 1; k < m; ++k) off[k - 1] = std::sqrt(static_cast<double>(k));
  return detail::golub_welsch(diag, off);
}

/// Point set with weights summing to 1.
struct PointRule {
  std::size_t dim = 0;
  std::vector<double> points;  // row-major, `dim` coordinates per point
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const { return {points.data() + i * dim, dim}; }
};

/// Product rule on S^d in R^{d+1}: the last coordinate carries a Gauss rule
/// for the weight (1 - t^2)^{(d-2)/2}, the rest recurse onto S^{d-1}; S^1 uses
/// 2m equispaced angles. Exact for polynomials of degree <= 2m - 1.
inline PointRule sphere_product_rule(std::size_t d, std::size_t m) {
  if (d < 1) throw domain_error("sphere_product_rule: d must be positive");
  if (m < 1) throw structural_error("sphere_product_rule: need at least one node");
  PointRule r;
  if (d == 1) {
    r.dim = 2;
    const std::size_t k = 2 * m;
    for (std::size_t i = 0; i < k; ++i) {
      const double th = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(k);
      r.points.push_back(std::cos(th));
      r.points.push_back(std::sin(th));
      r.weights.push_back(1.0 / static_cast<double>(k));
    }
    return r;
  }
  const double a = 0.5 * (static_cast<double>(d) - 2.0);
  const Rule1D t = gauss_jacobi(m, a, a);
  const PointRule sub = sphere_product_rule(d - 1, m);
  const double total = static_cast<double>(t.nodes.size()) * static_cast<double>(sub.size());
  if (total > 5e7) throw domain_error("sphere_product_rule: rule too large; use monte-carlo");
  r.dim = d + 1;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const double c = t.nodes[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (std::size_t j = 0; j < sub.size(); ++j) {
      for (double x : sub.point(j)) r.points.push_back(s * x);
      r.points.push_back(c);
      r.weights.push_back(t.weights[i] * sub.weights[j]);
    }
  }
  return r;
}

/// Tensor Gauss-Hermite rule for the standard Gaussian measure on R^k.
inline PointRule gauss_hermite_tensor(std::size_t k, std::size_t m) {
  if (k < 1 || k > 4) throw domain_error("gauss_hermite_tensor: supported for 1 <= k <= 4");
  const Rule1D g = gauss_hermite(m);
  PointRule r;
  r.dim = k;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    double w = 1.0;
    for (std::size_t a = 0; a < k; ++a) {
      r.points.push_back(g.nodes[idx[a]]);
      w *= g.weights[idx[a]];
    }
    r.weights.push_back(w);
    std::size_t a = 0;
    while (a < k && ++idx[a] == m) idx[a++] = 0;
    if (a == k) break;
  }
  return r;
}

}  // namespace flagsob::quadrature
