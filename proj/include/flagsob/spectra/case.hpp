#pragma once

#include "flagsob/error.hpp"
#include "flagsob/exactpoly/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace flagsob::spectra {

using exactpoly::Rational;

enum class Family { real, complex, quaternionic, octonionic };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::real: return "real";
    case Family::complex: return "complex";
    case Family::quaternionic: return "quaternionic";
    case Family::octonionic: return "octonionic";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "real") return Family::real;
  if (s == "complex") return Family::complex;
  if (s == "quaternionic") return Family::quaternionic;
  if (s == "octonionic") return Family::octonionic;
  throw domain_error("unknown case '" + std::string(s) + "'");
}

/// One of the four rank-one geometries together with its rank parameter.
/// The flag manifold is the unit sphere S^d in R^{d+1}.
struct CaseId {
  Family family = Family::real;
  int n = 1;  // fixed to 1 (unused) for the octonionic case

  CaseId() = default;
  CaseId(Family f, int rank) : family(f), n(f == Family::octonionic ? 1 : rank) {
    if (n < 1) throw domain_error("CaseId: rank parameter must be positive");
  }

  static CaseId real(int n) { return {Family::real, n}; }
  static CaseId complex(int n) { return {Family::complex, n}; }
  static CaseId quaternionic(int n) { return {Family::quaternionic, n}; }
  static CaseId octonionic() { return {Family::octonionic, 1}; }

  int sphere_dim() const {
    switch (family) {
      case Family::real: return n;
      case Family::complex: return 2 * n + 1;
      case Family::quaternionic: return 4 * n + 3;
      case Family::octonionic: return 15;
    }
    return 0;
  }
  int ambient_dim() const { return sphere_dim() + 1; }

  int m_alpha() const {
    switch (family) {
      case Family::real: return n;
      case Family::complex: return 2 * n;
      case Family::quaternionic: return 4 * n;
      case Family::octonionic: return 8;
    }
    return 0;
  }
  int m_2alpha() const {
    switch (family) {
      case Family::real: return 0;
      case Family::complex: return 1;
      case Family::quaternionic: return 3;
      case Family::octonionic: return 7;
    }
    return 0;
  }

  /// rho(H_0) = (m_alpha + 2 m_2alpha) / 2.
  Rational rho() const { return Rational(m_alpha() + 2 * m_2alpha(), 2); }

  /// Sharp log-Sobolev constant: 1/n, 1/(2n), 1/(4n), 1/8.
  Rational sharp_constant() const { return Rational(1, m_alpha()); }

  /// Parameter of the second-order differential intertwiner: nu = (n-2)/2,
  /// n, 2n+2 in the classical cases; r = 1 in the octonionic case.
  Rational special_parameter() const {
    switch (family) {
      case Family::real: return Rational(n - 2, 2);
      case Family::complex: return Rational(n);
      case Family::quaternionic: return Rational(2 * n + 2);
      case Family::octonionic: return Rational(1);
    }
    return Rational(0);
  }

  std::string name() const {
    std::string s(to_string(family));
    if (family != Family::octonionic) s += "(n=" + std::to_string(n) + ")";
    return s;
  }

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

/// K-type label. Meaning of (first, second) by family:
///   real: (k, 0); complex: (p, q); quaternionic: (p, q), p >= q, p - q even;
///   octonionic: (N, j), N >= j, N - j even.
struct KTypeLabel {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const KTypeLabel&, const KTypeLabel&) = default;
};

inline bool is_valid(const CaseId& c, const KTypeLabel& l) {
  switch (c.family) {
    case Family::real: return l.first >= 0 && l.second == 0;
    case Family::complex: return l.first >= 0 && l.second >= 0;
    case Family::quaternionic:
    case Family::octonionic:
      return l.second >= 0 && l.first >= l.second && (l.first - l.second) % 2 == 0;
  }
  return false;
}

inline void validate(const CaseId& c, const KTypeLabel& l) {
  if (!is_valid(c, l))
    throw domain_error("invalid K-type label (" + std::to_string(l.first) + "," + std::to_string(l.second) + ") for " +
                       c.name());
}

/// Degree of the spherical harmonics containing the K-type.
inline int degree(const CaseId& c, const KTypeLabel& l) {
  validate(c, l);
  return c.family == Family::complex ? l.first + l.second : l.first;
}

inline std::string label_string(const KTypeLabel& l) {
  return "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
}

}  // namespace flagsob::spectra
