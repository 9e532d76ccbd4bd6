#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <ostream>
#include <string>

namespace flagsob::exactpoly {

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}
inline std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

/// Gaussian rational re + i*im.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit promotion is intended
  ComplexRational(int r) : re(r) {}                  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& c) {
    return os << "(" << c.re << (c.im < 0 ? " - " : " + ") << abs(c.im) << "i)";
  }
};

/// Operations MultiPoly needs from a coefficient ring.
template <class C>
struct CoefTraits;

template <>
struct CoefTraits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational conj(const Rational& c) { return c; }
  static std::complex<double> to_complex(const Rational& c) { return {to_double(c), 0.0}; }
  static bool is_real(const Rational&) { return true; }
};

template <>
struct CoefTraits<ComplexRational> {
  static bool is_zero(const ComplexRational& c) { return c.re == 0 && c.im == 0; }
  static ComplexRational conj(const ComplexRational& c) { return {c.re, -c.im}; }
  static std::complex<double> to_complex(const ComplexRational& c) {
    return {to_double(c.re), to_double(c.im)};
  }
  static bool is_real(const ComplexRational& c) { return c.im == 0; }
};

}  // namespace flagsob::exactpoly
