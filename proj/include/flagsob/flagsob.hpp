#pragma once

#include "flagsob/acceptance.hpp"
#include "flagsob/error.hpp"
#include "flagsob/exactpoly/compiled.hpp"
#include "flagsob/exactpoly/harmonic.hpp"
#include "flagsob/exactpoly/multipoly.hpp"
#include "flagsob/exactpoly/operators.hpp"
#include "flagsob/exactpoly/rational.hpp"
#include "flagsob/gauss_limit/constants.hpp"
#include "flagsob/gauss_limit/heisenberg_logsob.hpp"
#include "flagsob/gauss_limit/projected.hpp"
#include "flagsob/gauss_limit/radial.hpp"
#include "flagsob/geometry/heisenberg.hpp"
#include "flagsob/geometry/horizontal.hpp"
#include "flagsob/geometry/octonion.hpp"
#include "flagsob/geometry/sphere.hpp"
#include "flagsob/inequalities/band_limited.hpp"
#include "flagsob/inequalities/gross.hpp"
#include "flagsob/inequalities/hls.hpp"
#include "flagsob/inequalities/log_sobolev.hpp"
#include "flagsob/inequalities/report.hpp"
#include "flagsob/quadrature/heisenberg_mu.hpp"
#include "flagsob/quadrature/integrate.hpp"
#include "flagsob/quadrature/rules.hpp"
#include "flagsob/quadrature/spec.hpp"
#include "flagsob/quadrature/stats.hpp"
#include "flagsob/rng.hpp"
#include "flagsob/spectra/case.hpp"
#include "flagsob/spectra/eigenvalues.hpp"
#include "flagsob/spectra/log_gamma.hpp"
#include "flagsob/spectra/table.hpp"

namespace flagsob {

inline constexpr const char* version = "1.0.0";

}  // namespace flagsob
