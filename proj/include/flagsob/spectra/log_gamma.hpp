#pragma once

#include "flagsob/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace flagsob::spectra {

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// log|Gamma(x)| and sign(Gamma(x)) for any real x that is not a pole.
struct SignedLogGamma {
  double log_abs;
  int sign;
};

inline SignedLogGamma signed_log_gamma(double x) {
  if (x > 0.0) return {log_gamma(x), 1};
  if (x == std::floor(x)) throw domain_error("signed_log_gamma: pole at non-positive integer " + std::to_string(x));
  // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
  const double s = std::sin(std::numbers::pi * x);
  SignedLogGamma r;
  r.log_abs = std::log(std::numbers::pi / std::abs(s)) - log_gamma(1.0 - x);
  r.sign = s > 0 ? 1 : -1;
  return r;
}

}  // namespace flagsob::spectra
