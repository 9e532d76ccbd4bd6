#pragma once

#include "flagsob/spectra/case.hpp"
#include "flagsob/spectra/log_gamma.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace flagsob::spectra {

/// An eigenvalue with its exact value when the formula is rational at the
/// given parameter, and a double approximation in every case.
struct SpectralValue {
  enum class Source { exact, floating, log_gamma };

  std::optional<Rational> exact;
  double approx = 0.0;
  Source source = Source::exact;

  static SpectralValue from_exact(Rational r) {
    SpectralValue v;
    v.approx = exactpoly::to_double(r);
    v.exact = std::move(r);
    return v;
  }
  static SpectralValue from_double(double x, Source s) {
    SpectralValue v;
    v.approx = x;
    v.source = s;
    return v;
  }
};

inline std::string_view to_string(SpectralValue::Source s) {
  switch (s) {
    case SpectralValue::Source::exact: return "exact";
    case SpectralValue::Source::floating: return "floating";
    case SpectralValue::Source::log_gamma: return "log_gamma";
  }
  return "?";
}

/// How the spectral parameter is given. The octonionic formula is written in
/// r with nu = 11 - r; the classical cases accept only nu.
enum class Parameter { nu, r };

enum class EvalMode { automatic, force_log_gamma };

namespace detail {

template <class T>
struct ProductAccumulator {
  T value = T(1);

  void multiply(const T& num, const T& den, const std::string& factor) {
    if (den == 0) throw domain_error("intertwiner_eigenvalue: pole, factor " + factor + " vanishes");
    value *= num;
    value /= den;
  }
};

inline std::string factor_name(const std::string& expr, const char* index, int i) {
  return "(" + expr + ") at " + index + "=" + std::to_string(i);
}

template <class T>
T classical_product(const CaseId& c, const KTypeLabel& l, const T& nu) {
  ProductAccumulator<T> acc;
  const int n = c.n;
  switch (c.family) {
    case Family::real:
      for (int j = 1; j <= l.first; ++j)
        acc.multiply(T(n - 1 + j) - nu, nu + T(j - 1), factor_name("nu+j-1", "j", j));
      break;
    case Family::complex:
      for (int j = 1; j <= l.first; ++j)
        acc.multiply(T(2 * n + 2 * j) - nu, nu + T(2 * j - 2), factor_name("nu+2j-2", "j", j));
      for (int j = 1; j <= l.second; ++j)
        acc.multiply(T(2 * n + 2 * j) - nu, nu + T(2 * j - 2), factor_name("nu+2l-2", "l", j));
      break;
    case Family::quaternionic: {
      const int r = (l.first - l.second) / 2, s = (l.first + l.second) / 2;
      for (int j = 1; j <= r; ++j)
        acc.multiply(T(4 * n + 2 + 2 * j) - nu, nu + T(2 * j - 4), factor_name("nu+2j-4", "j", j));
      for (int j = 1; j <= s; ++j)
        acc.multiply(T(4 * n + 4 + 2 * j) - nu, nu + T(2 * j - 2), factor_name("nu+2l-2", "l", j));
      break;
    }
    case Family::octonionic:
      throw structural_error("classical_product: octonionic case");
  }
  return acc.value;
}

// Gamma(x + a) / Gamma(x) for integer a, as a rational product.
inline Rational gamma_shift_ratio(const Rational& x, int a, const std::string& where) {
  Rational out(1);
  if (a >= 0) {
    for (int i = 0; i < a; ++i) out *= x + i;
  } else {
    for (int i = 1; i <= -a; ++i) {
      Rational f = x - i;
      if (f == 0) throw domain_error("intertwiner_eigenvalue: pole in " + where);
      out /= f;
    }
  }
  return out;
}

// Octonionic a_{k,j}(r) with k = (N - j)/2, r an integer, by pairing Gamma
// factors whose arguments differ by r.
inline Rational octonionic_exact(int k, int j, int r) {
  const Rational half_r(r, 2);
  Rational v = gamma_shift_ratio(Rational(2 * j + 2 * k + 11, 2) - half_r, r, "Gamma(j+k+11/2+r/2)/Gamma(j+k+11/2-r/2)");
  v *= gamma_shift_ratio(Rational(2 * k + 5, 2) - half_r, r, "Gamma(k+5/2+r/2)/Gamma(k+5/2-r/2)");
  const Rational d1 = gamma_shift_ratio(Rational(11, 2) - half_r, r, "Gamma(11/2+r/2)/Gamma(11/2-r/2)");
  const Rational d2 = gamma_shift_ratio(Rational(5, 2) - half_r, r, "Gamma(5/2+r/2)/Gamma(5/2-r/2)");
  if (d1 == 0) throw domain_error("intertwiner_eigenvalue: pole, factor Gamma(11/2-r/2) at r=" + std::to_string(r));
  if (d2 == 0) throw domain_error("intertwiner_eigenvalue: pole, factor Gamma(5/2-r/2) at r=" + std::to_string(r));
  return v / (d1 * d2);
}

inline double octonionic_log_gamma(int k, int j, double r) {
  const double h = r / 2.0;
  const double num[4] = {j + k + 5.5 + h, 5.5 - h, k + 2.5 + h, 2.5 - h};
  const double den[4] = {j + k + 5.5 - h, 5.5 + h, k + 2.5 - h, 2.5 + h};
  double log_abs = 0.0;
  int sign = 1;
  for (double x : num) {
    auto g = signed_log_gamma(x);
    log_abs += g.log_abs;
    sign *= g.sign;
  }
  for (double x : den) {
    auto g = signed_log_gamma(x);
    log_abs -= g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_abs);
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline double to_r(Parameter kind, double x) { return kind == Parameter::r ? x : 11.0 - x; }

}  // namespace detail

/// Eigenvalue of the normalized intertwining operator on the K-type `l`.
/// Exact whenever the parameter is rational (classical cases) or an integer
/// r (octonionic case); otherwise log-gamma.
inline SpectralValue intertwiner_eigenvalue(const CaseId& c, const KTypeLabel& l, const Rational& param,
                                            Parameter kind = Parameter::nu, EvalMode mode = EvalMode::automatic) {
  validate(c, l);
  if (c.family != Family::octonionic) {
    if (kind != Parameter::nu) throw structural_error("intertwiner_eigenvalue: r-parameter only applies to the octonionic case");
    if (mode == EvalMode::force_log_gamma)
      return SpectralValue::from_double(exactpoly::to_double(detail::classical_product<Rational>(c, l, param)),
                                        SpectralValue::Source::floating);
    return SpectralValue::from_exact(detail::classical_product<Rational>(c, l, param));
  }
  const Rational r = kind == Parameter::r ? param : Rational(11) - param;
  const int k = (l.first - l.second) / 2, j = l.second;
  if (mode == EvalMode::automatic && detail::is_integer(r))
    return SpectralValue::from_exact(detail::octonionic_exact(k, j, static_cast<int>(boost::multiprecision::numerator(r))));
  return SpectralValue::from_double(detail::octonionic_log_gamma(k, j, exactpoly::to_double(r)),
                                    SpectralValue::Source::log_gamma);
}

inline SpectralValue intertwiner_eigenvalue(const CaseId& c, const KTypeLabel& l, double param,
                                            Parameter kind = Parameter::nu) {
  validate(c, l);
  if (!std::isfinite(param)) throw domain_error("intertwiner_eigenvalue: non-finite parameter");
  if (c.family != Family::octonionic) {
    if (kind != Parameter::nu) throw structural_error("intertwiner_eigenvalue: r-parameter only applies to the octonionic case");
    return SpectralValue::from_double(detail::classical_product<double>(c, l, param), SpectralValue::Source::floating);
  }
  const int k = (l.first - l.second) / 2, j = l.second;
  return SpectralValue::from_double(detail::octonionic_log_gamma(k, j, detail::to_r(kind, param)),
                                    SpectralValue::Source::log_gamma);
}

/// Eigenvalue of the CR-Laplacian on the K-type.
///   real k(k+n-1); complex k(k+2n) - (p-q)^2; quaternionic p(p+4n+2) - q(q+2);
///   octonionic N(N+14) - j(j+6).
inline long long deltab_eigenvalue(const CaseId& c, const KTypeLabel& l) {
  validate(c, l);
  const long long a = l.first, b = l.second, n = c.n;
  switch (c.family) {
    case Family::real: return a * (a + n - 1);
    case Family::complex: {
      const long long k = a + b, j = a - b;
      return k * (k + 2 * n) - j * j;
    }
    case Family::quaternionic: return a * (a + 4 * n + 2) - b * (b + 2);
    case Family::octonionic: return a * (a + 14) - b * (b + 6);
  }
  return 0;
}

/// (k + (n-2)/2)(k + n/2).
inline Rational yamabe_eigenvalue(int n, int k) {
  if (n < 1) throw domain_error("yamabe_eigenvalue: n must be positive");
  return (Rational(k) + Rational(n - 2, 2)) * (Rational(k) + Rational(n, 2));
}

/// Both sides of the identity linking a(nu*) to the CR-Laplacian spectrum.
///   real:         a_k((n-2)/2) (n/2)((n-2)/2)  vs (k+(n-2)/2)(k+n/2)
///   complex:      n^2 a_{p,q}(n)               vs (2p+n)(2q+n)
///   quaternionic: 2n(2n+2) a_{p,q}(2n+2)        vs (2n+2r)(2n+2+2s)
///   octonionic:   40 a_{k,j}(1)                 vs 4(j+k+5)(k+2)
/// `shifted` is lhs minus the value at the constant label and is compared
/// with deltab_eigenvalue.
struct SpecialNuIdentity {
  CaseId case_id;
  KTypeLabel label;
  bool degenerate = false;
  std::string note;
  std::optional<Rational> lhs;
  Rational rhs;
  std::optional<Rational> shifted;
  long long deltab = 0;

  bool holds() const { return degenerate || (lhs && *lhs == rhs && shifted && *shifted == Rational(deltab)); }
};

inline SpecialNuIdentity special_nu_identity(const CaseId& c, const KTypeLabel& l) {
  validate(c, l);
  SpecialNuIdentity id;
  id.case_id = c;
  id.label = l;
  id.deltab = deltab_eigenvalue(c, l);
  const int n = c.n;
  Rational scale, constant;
  switch (c.family) {
    case Family::real:
      scale = Rational(n, 2) * Rational(n - 2, 2);
      constant = yamabe_eigenvalue(n, 0);
      id.rhs = yamabe_eigenvalue(n, l.first);
      break;
    case Family::complex:
      scale = Rational(n * n);
      constant = scale;
      id.rhs = Rational((2 * l.first + n) * (2 * l.second + n));
      break;
    case Family::quaternionic: {
      const int r = (l.first - l.second) / 2, s = (l.first + l.second) / 2;
      scale = Rational(2 * n * (2 * n + 2));
      constant = scale;
      id.rhs = Rational((2 * n + 2 * r) * (2 * n + 2 + 2 * s));
      break;
    }
    case Family::octonionic: {
      const int k = (l.first - l.second) / 2, j = l.second;
      scale = Rational(40);
      constant = scale;
      id.rhs = Rational(4 * (j + k + 5) * (k + 2));
      break;
    }
  }
  if (c.family == Family::real && n == 2) {
    id.degenerate = true;
    id.note = "degenerate normalization: (n-2)/2 = 0 and a_k(0) has a pole at factor (nu+j-1), j=1";
    return id;
  }
  const Parameter kind = c.family == Family::octonionic ? Parameter::r : Parameter::nu;
  const SpectralValue a = intertwiner_eigenvalue(c, l, c.special_parameter(), kind);
  id.lhs = *a.exact * scale;
  id.shifted = *id.lhs - constant;
  return id;
}

/// C * lambda - k with k the spherical-harmonic degree; nonnegative by the
/// theorem's spectral estimate.
inline Rational theorem_bound_margin(const CaseId& c, const KTypeLabel& l) {
  return c.sharp_constant() * Rational(deltab_eigenvalue(c, l)) - Rational(degree(c, l));
}

/// Whether the label lies in the equality set of the spectral estimate.
inline bool in_equality_set(const CaseId& c, const KTypeLabel& l) {
  validate(c, l);
  switch (c.family) {
    case Family::real: return l.first <= 1;
    case Family::complex: return l.first == 0 || l.second == 0;
    case Family::quaternionic:
    case Family::octonionic: return l.first == l.second;
  }
  return false;
}

/// All labels of degree <= max_degree, ordered by degree.
inline std::vector<KTypeLabel> enumerate_ktypes(const CaseId& c, int max_degree) {
  if (max_degree < 0) throw domain_error("enumerate_ktypes: max_degree must be nonnegative");
  std::vector<KTypeLabel> out;
  for (int k = 0; k <= max_degree; ++k) {
    switch (c.family) {
      case Family::real: out.push_back({k, 0}); break;
      case Family::complex:
        for (int p = k; p >= 0; --p) out.push_back({p, k - p});
        break;
      case Family::quaternionic:
      case Family::octonionic:
        for (int q = k % 2; q <= k; q += 2) out.push_back({k, q});
        break;
    }
  }
  return out;
}

}  // namespace flagsob::spectra
