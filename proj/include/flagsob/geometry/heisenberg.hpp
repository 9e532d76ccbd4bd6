#pragma once

#include "flagsob/exactpoly/operators.hpp"
#include "flagsob/geometry/sphere.hpp"

#include <complex>
#include <string>
#include <vector>

namespace flagsob::geometry {

using exactpoly::ComplexPoly;
using exactpoly::ComplexRational;
using exactpoly::FirstOrderOperator;
using exactpoly::Rational;
using exactpoly::RationalPoly;

/// (z, t) in C^n x R.
struct HeisenbergPoint {
  std::vector<std::complex<double>> z;
  double t = 0.0;

  std::size_t n() const { return z.size(); }
  double z_norm_sq() const {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return s;
  }

  /// Real coordinates in the order (x_1..x_n, y_1..y_n, t).
  std::vector<double> real_coords() const {
    std::vector<double> v(2 * z.size() + 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      v[j] = z[j].real();
      v[z.size() + j] = z[j].imag();
    }
    v.back() = t;
    return v;
  }

  static HeisenbergPoint from_real_coords(std::span<const double> v) {
    if (v.size() % 2 == 0) throw structural_error("HeisenbergPoint: need 2n+1 coordinates");
    const std::size_t n = v.size() / 2;
    HeisenbergPoint h;
    h.z.resize(n);
    for (std::size_t j = 0; j < n; ++j) h.z[j] = {v[j], v[n + j]};
    h.t = v.back();
    return h;
  }
};

/// (z,t)(z',t') = (z + z', t + t' + 2 Im z . conj(z')).
inline HeisenbergPoint heisenberg_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
  if (a.n() != b.n()) throw structural_error("heisenberg_mul: dimension mismatch");
  HeisenbergPoint r;
  r.z.resize(a.n());
  std::complex<double> s = 0.0;
  for (std::size_t j = 0; j < a.n(); ++j) {
    r.z[j] = a.z[j] + b.z[j];
    s += a.z[j] * std::conj(b.z[j]);
  }
  r.t = a.t + b.t + 2.0 * s.imag();
  return r;
}

/// Point of S^{2n+1} with coordinates (Re w0, Im w0, Re w1, Im w1, ...).
inline SpherePoint sphere_from_complex(const std::vector<std::complex<double>>& w) {
  std::vector<double> v;
  v.reserve(2 * w.size());
  for (const auto& c : w) {
    v.push_back(c.real());
    v.push_back(c.imag());
  }
  return SpherePoint::normalized(std::move(v));
}

namespace detail {

inline std::vector<std::complex<double>> cayley_w(const HeisenbergPoint& h, double t) {
  const std::complex<double> z0(h.z_norm_sq(), t);
  const std::complex<double> u = z0 + 1.0;
  std::vector<std::complex<double>> w(h.n() + 1);
  w[0] = (z0 - 1.0) / u;
  for (std::size_t j = 0; j < h.n(); ++j) w[j + 1] = 2.0 * h.z[j] / u;
  return w;
}

}  // namespace detail

/// w0 = (z0 - 1)/(z0 + 1), w = 2z/(z0 + 1) with z0 = it + |z|^2.
inline SpherePoint cayley(const HeisenbergPoint& h) { return sphere_from_complex(detail::cayley_w(h, h.t)); }

/// The same map with z0 = |z|^2 - it. With the group law above, this is the
/// version that carries the left-invariant horizontal structure to the
/// sphere's: |grad_b (F o C)|^2 = 4 |grad_b F|^2 o C / ((1+|z|^2)^2 + t^2).
inline SpherePoint cr_cayley(const HeisenbergPoint& h) { return sphere_from_complex(detail::cayley_w(h, -h.t)); }

/// Real Jacobian of cr_cayley: (2n+2) x (2n+1), columns in the order
/// (x_1..x_n, y_1..y_n, t), rows as in sphere_from_complex.
inline std::vector<std::vector<double>> cr_cayley_jacobian(const HeisenbergPoint& h) {
  const std::size_t n = h.n();
  const std::complex<double> z0(h.z_norm_sq(), -h.t);
  const std::complex<double> u = z0 + 1.0, u2 = u * u;
  const std::complex<double> I(0.0, 1.0);
  std::vector<std::vector<double>> J(2 * n + 2, std::vector<double>(2 * n + 1, 0.0));
  auto column = [&](std::size_t col, std::complex<double> dz0, std::size_t zj, std::complex<double> dzj) {
    const std::complex<double> dw0 = 2.0 * dz0 / u2;
    J[0][col] = dw0.real();
    J[1][col] = dw0.imag();
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> dw = -2.0 * h.z[k] * dz0 / u2;
      if (k == zj) dw += 2.0 * dzj / u;
      J[2 * k + 2][col] = dw.real();
      J[2 * k + 3][col] = dw.imag();
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    column(j, 2.0 * h.z[j].real(), j, 1.0);
    column(n + j, 2.0 * h.z[j].imag(), j, I);
  }
  column(2 * n, -I, n, 0.0);
  return J;
}

/// Variable names (x1..xn, y1..yn, t).
inline std::vector<std::string> heisenberg_vars(int n) {
  if (n < 1) throw domain_error("heisenberg_vars: n must be positive");
  std::vector<std::string> v;
  for (int j = 1; j <= n; ++j) v.push_back("x" + std::to_string(j));
  for (int j = 1; j <= n; ++j) v.push_back("y" + std::to_string(j));
  v.push_back("t");
  return v;
}

/// Left-invariant fields X_j = d/dx_j + 2y_j d/dt, Y_j = d/dy_j - 2x_j d/dt,
/// and Z_j = (X_j - i Y_j)/2 = d/dz_j + i conj(z_j) d/dt.
struct HeisenbergFields {
  std::vector<FirstOrderOperator<Rational>> X;
  std::vector<FirstOrderOperator<Rational>> Y;
  std::vector<FirstOrderOperator<ComplexRational>> Z;
};

inline HeisenbergFields heisenberg_fields(int n) {
  const auto vars = heisenberg_vars(n);
  const std::string tn = "t";
  HeisenbergFields f;
  for (int j = 1; j <= n; ++j) {
    const std::string xj = "x" + std::to_string(j), yj = "y" + std::to_string(j);
    const RationalPoly x = RationalPoly::variable(vars, xj), y = RationalPoly::variable(vars, yj);
    auto X = FirstOrderOperator<Rational>::partial(vars, xj) +
             FirstOrderOperator<Rational>(
                 [&] {
                   std::vector<RationalPoly> c(vars.size(), RationalPoly(vars));
                   c.back() = Rational(2) * y;
                   return c;
                 }());
    auto Y = FirstOrderOperator<Rational>::partial(vars, yj) +
             FirstOrderOperator<Rational>(
                 [&] {
                   std::vector<RationalPoly> c(vars.size(), RationalPoly(vars));
                   c.back() = Rational(-2) * x;
                   return c;
                 }());
    std::vector<ComplexPoly> zc;
    zc.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      zc.push_back(exactpoly::to_complex_poly(X.coefficients()[i]) * ComplexRational(Rational(1, 2)) +
                   exactpoly::to_complex_poly(Y.coefficients()[i]) * ComplexRational(Rational(0), Rational(-1, 2)));
    f.X.push_back(std::move(X));
    f.Y.push_back(std::move(Y));
    f.Z.emplace_back(std::move(zc));
  }
  return f;
}

/// Delta_b f = sum_j (X_j^2 + Y_j^2) f.
template <class Coef>
exactpoly::MultiPoly<Coef> heisenberg_deltab(const exactpoly::MultiPoly<Coef>& f, int n) {
  if (f.vars() != heisenberg_vars(n)) throw structural_error("heisenberg_deltab: expected variables (x, y, t)");
  const auto fields = heisenberg_fields(n);
  exactpoly::MultiPoly<Coef> out(f.vars());
  auto lift = [](const FirstOrderOperator<Rational>& op) {
    if constexpr (std::is_same_v<Coef, Rational>) {
      return op;
    } else {
      std::vector<exactpoly::MultiPoly<Coef>> c;
      for (const auto& p : op.coefficients()) c.push_back(exactpoly::to_complex_poly(p));
      return FirstOrderOperator<Coef>(std::move(c));
    }
  };
  for (int j = 0; j < n; ++j) {
    const auto X = lift(fields.X[j]), Y = lift(fields.Y[j]);
    out += X(X(f)) + Y(Y(f));
  }
  return out;
}

/// Delta_x f + Delta_y f + 4 (y . grad_x - x . grad_y) df/dt + 4 |z|^2 d^2f/dt^2.
template <class Coef>
exactpoly::MultiPoly<Coef> heisenberg_deltab_formula(const exactpoly::MultiPoly<Coef>& f, int n) {
  using P = exactpoly::MultiPoly<Coef>;
  const auto vars = heisenberg_vars(n);
  if (f.vars() != vars) throw structural_error("heisenberg_deltab_formula: expected variables (x, y, t)");
  std::vector<std::size_t> xy(2 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < xy.size(); ++i) xy[i] = i;
  P out = exactpoly::euclidean_laplacian(f, std::span<const std::size_t>(xy));
  const std::size_t t = vars.size() - 1;
  const P ft = exactpoly::differentiate(f, t);
  const P ftt = exactpoly::differentiate(ft, t);
  P mixed(vars), z2(vars);
  for (int j = 0; j < n; ++j) {
    const P x = P::variable(vars, vars[j]), y = P::variable(vars, vars[n + j]);
    mixed += y * exactpoly::differentiate(ft, static_cast<std::size_t>(j)) -
             x * exactpoly::differentiate(ft, static_cast<std::size_t>(n + j));
    z2 += x * x + y * y;
  }
  out += Coef(Rational(4)) * mixed;
  out += Coef(Rational(4)) * z2 * ftt;
  return out;
}

}  // namespace flagsob::geometry
