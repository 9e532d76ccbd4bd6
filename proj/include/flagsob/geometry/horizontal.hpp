#pragma once

#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/geometry/octonion.hpp"
#include "flagsob/geometry/sphere.hpp"
#include "flagsob/rng.hpp"
#include "flagsob/spectra/case.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace flagsob::geometry {

using spectra::CaseId;
using spectra::Family;
using Vector = std::vector<double>;

namespace detail {

inline void check_point(const CaseId& c, const SpherePoint& xi) {
  if (xi.ambient_dim() != static_cast<std::size_t>(c.ambient_dim()))
    throw structural_error("horizontal frame: point dimension does not match " + c.name());
}

inline void normalize(Vector& v) {
  const double r = std::sqrt(norm_sq(v));
  for (double& x : v) x /= r;
}

// Tangent vectors of the octonionic Hopf fibre through (a, b) in O^2: the
// fibre is the line {(x, m x)} with m = b a^{-1} (or {(m' y, y)} with
// m' = a b^{-1}); varying x = a along e_i a gives (e_i a, m (e_i a)).
inline std::vector<Vector> octonionic_vertical(std::span<const double> xi, OctonionTable table) {
  Octonion a, b;
  std::copy(xi.begin(), xi.begin() + 8, a.begin());
  std::copy(xi.begin() + 8, xi.end(), b.begin());
  const double na = oct_norm_sq(a), nb = oct_norm_sq(b);
  std::vector<Vector> out;
  out.reserve(7);
  if (na >= nb) {
    Octonion m = oct_mul(b, oct_conj(a), table);
    for (double& v : m) v /= na;
    for (int i = 1; i < 8; ++i) {
      const Octonion u = oct_mul(oct_unit(i), a, table), w = oct_mul(m, u, table);
      Vector v(16);
      std::copy(u.begin(), u.end(), v.begin());
      std::copy(w.begin(), w.end(), v.begin() + 8);
      normalize(v);
      out.push_back(std::move(v));
    }
  } else {
    Octonion m = oct_mul(a, oct_conj(b), table);
    for (double& v : m) v /= nb;
    for (int i = 1; i < 8; ++i) {
      const Octonion u = oct_mul(oct_unit(i), b, table), w = oct_mul(m, u, table);
      Vector v(16);
      std::copy(w.begin(), w.end(), v.begin());
      std::copy(u.begin(), u.end(), v.begin() + 8);
      normalize(v);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace detail

/// Orthonormal basis of the vertical (Hopf fibre) directions at xi:
///   real: none; complex: J xi (multiplication by i on C^{n+1});
///   quaternionic: xi i, xi j, xi k (right multiplication on H^{n+1});
///   octonionic: tangent space of the fibre of S^15 -> S^8.
inline std::vector<Vector> vertical_basis(const CaseId& c, const SpherePoint& xi,
                                          OctonionTable table = OctonionTable::cayley_dickson) {
  detail::check_point(c, xi);
  const auto x = xi.coords();
  const std::size_t D = x.size();
  std::vector<Vector> out;
  switch (c.family) {
    case Family::real: break;
    case Family::complex: {
      Vector v(D);
      for (std::size_t k = 0; k < D; k += 2) {
        v[k] = -x[k + 1];
        v[k + 1] = x[k];
      }
      out.push_back(std::move(v));
      break;
    }
    case Family::quaternionic:
      for (int u = 1; u <= 3; ++u) {
        Quaternion e{};
        e[static_cast<std::size_t>(u)] = 1.0;
        Vector v(D);
        for (std::size_t k = 0; k < D; k += 4) {
          const Quaternion q = quat_mul({x[k], x[k + 1], x[k + 2], x[k + 3]}, e);
          std::copy(q.begin(), q.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
        }
        out.push_back(std::move(v));
      }
      break;
    case Family::octonionic: out = detail::octonionic_vertical(x, table); break;
  }
  return out;
}

/// Orthonormal basis of the horizontal subspace at a point.
struct HorizontalFrame {
  SpherePoint base;
  std::vector<Vector> basis;
};

/// Gram-Schmidt of the ambient coordinate vectors, taken in an order shuffled
/// by `seed`, against xi and the vertical basis.
inline HorizontalFrame horizontal_frame(const CaseId& c, const SpherePoint& xi, std::uint64_t seed = 0,
                                        OctonionTable table = OctonionTable::cayley_dickson) {
  const std::size_t D = xi.ambient_dim();
  std::vector<Vector> fixed = vertical_basis(c, xi, table);
  fixed.emplace_back(xi.coords().begin(), xi.coords().end());
  const std::size_t want = D - fixed.size();

  std::vector<std::size_t> order(D);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed, 0);
  for (std::size_t i = D; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  HorizontalFrame frame{xi, {}};
  std::vector<bool> used(D, false);
  for (double threshold : {0.5, 0.1, 1e-6}) {
    for (std::size_t idx : order) {
      if (frame.basis.size() == want) break;
      if (used[idx]) continue;
      Vector v(D, 0.0);
      v[idx] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto* set : {&fixed, &frame.basis})
          for (const auto& b : *set) {
            const double p = dot(v, b);
            for (std::size_t i = 0; i < D; ++i) v[i] -= p * b[i];
          }
      }
      const double r = std::sqrt(norm_sq(v));
      if (r < threshold) continue;
      for (double& e : v) e /= r;
      used[idx] = true;
      frame.basis.push_back(std::move(v));
    }
  }
  if (frame.basis.size() != want) throw numeric_error("horizontal_frame: Gram-Schmidt lost rank");
  return frame;
}

/// Projection of an ambient vector onto the span of the frame.
inline Vector project(const HorizontalFrame& frame, std::span<const double> g) {
  Vector out(g.size(), 0.0);
  for (const auto& b : frame.basis) {
    const double p = dot(g, b);
    for (std::size_t i = 0; i < g.size(); ++i) out[i] += p * b[i];
  }
  return out;
}

/// Horizontal gradient of a real polynomial on the sphere at xi.
inline Vector horizontal_gradient(const CaseId& c, const exactpoly::RationalPoly& f, const SpherePoint& xi,
                                  std::uint64_t seed = 0) {
  if (f.nvars() != xi.ambient_dim()) throw structural_error("horizontal_gradient: polynomial must use ambient coordinates");
  exactpoly::CompiledPoly cp(f);
  Vector g(xi.ambient_dim());
  cp.value_and_gradient(xi.coords(), g);
  return project(horizontal_frame(c, xi, seed), g);
}

/// |grad_b|^2 from an ambient gradient without building a frame:
/// |g|^2 - (g . xi)^2 - sum_i (g . v_i)^2.
inline double horizontal_norm_sq(std::span<const double> g, const SpherePoint& xi, const std::vector<Vector>& vertical) {
  double s = norm_sq(g);
  const double r = dot(g, xi.coords());
  s -= r * r;
  for (const auto& v : vertical) {
    const double p = dot(g, v);
    s -= p * p;
  }
  return std::max(s, 0.0);
}

inline double horizontal_norm_sq(const CaseId& c, std::span<const double> g, const SpherePoint& xi) {
  return horizontal_norm_sq(g, xi, vertical_basis(c, xi));
}

}  // namespace flagsob::geometry
