#pragma once

#include "flagsob/exactpoly/multipoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace flagsob::exactpoly {

/// Size limits for exact harmonic work; both are configurable.
struct PolyCaps {
  int max_degree = 12;
  std::size_t max_dims = 16;
};

/// One piece of the classical decomposition p = sum_j |x|^{2j} H_{k-2j}.
template <class Coef>
struct HarmonicComponent {
  int degree;           // k - 2j
  int radial_power;     // j
  MultiPoly<Coef> harmonic;
};

namespace detail {

// Top harmonic piece of a homogeneous p of degree k in d dims together with
// the quotient q = (p - H_k) / |x|^2, via
//   H_k = sum_j (-1)^j |x|^{2j} Delta^j p / prod_{i<=j} 2i (2k + d - 2 - 2i).
template <class Coef>
std::pair<MultiPoly<Coef>, MultiPoly<Coef>> split_top(const MultiPoly<Coef>& p, int k,
                                                      std::span<const std::size_t> dims) {
  const auto& vars = p.vars();
  const int d = static_cast<int>(dims.size());
  const MultiPoly<Coef> r2 = radius_squared<Coef>(vars, dims);

  MultiPoly<Coef> top = p;
  MultiPoly<Coef> quotient(vars);
  MultiPoly<Coef> lap = p;
  MultiPoly<Coef> r2pow = MultiPoly<Coef>::constant(vars, Coef(1));  // |x|^{2(j-1)}
  Rational denom(1);
  for (int j = 1; 2 * j <= k; ++j) {
    lap = euclidean_laplacian(lap, dims);
    if (lap.is_zero()) break;
    denom *= Rational(2 * j * (2 * k + d - 2 - 2 * j));
    Rational c = (j % 2 ? Rational(-1) : Rational(1)) / denom;
    MultiPoly<Coef> t = r2pow * lap;
    t *= Coef(c);
    quotient -= t;
    top += r2 * t;
    r2pow = r2pow * r2;
  }
  return {std::move(top), std::move(quotient)};
}

}  // namespace detail

/// Decompose a homogeneous polynomial (homogeneous in `dims`) into harmonic
/// pieces. Components come back top degree first; each satisfies
/// euclidean_laplacian(H) == 0 and sum |x|^{2j} H_{k-2j} == p exactly.
template <class Coef>
std::vector<HarmonicComponent<Coef>> harmonic_projection(const MultiPoly<Coef>& p,
                                                         std::span<const std::size_t> dims,
                                                         const PolyCaps& caps = {}) {
  if (dims.size() > caps.max_dims) throw domain_error("harmonic_projection: dimension cap exceeded");
  if (!p.is_homogeneous_in(dims)) throw domain_error("harmonic_projection: input is not homogeneous");
  std::vector<HarmonicComponent<Coef>> out;
  if (p.is_zero()) return out;
  int k = p.degree_in(dims);
  if (k > caps.max_degree) throw domain_error("harmonic_projection: degree cap exceeded");

  MultiPoly<Coef> rest = p;
  int j = 0;
  while (!rest.is_zero()) {
    auto [top, quotient] = detail::split_top(rest, k, dims);
    if (!top.is_zero()) out.push_back({k, j, std::move(top)});
    rest = std::move(quotient);
    k -= 2;
    ++j;
  }
  return out;
}

template <class Coef>
std::vector<HarmonicComponent<Coef>> harmonic_projection(const MultiPoly<Coef>& p,
                                                         const std::vector<std::string>& dims,
                                                         const PolyCaps& caps = {}) {
  auto idx = indices_of(p, dims);
  return harmonic_projection(p, std::span<const std::size_t>(idx), caps);
}

template <class Coef>
MultiPoly<Coef> reassemble(const std::vector<HarmonicComponent<Coef>>& comps, const std::vector<std::string>& vars,
                           std::span<const std::size_t> dims) {
  MultiPoly<Coef> r2 = radius_squared<Coef>(vars, dims);
  MultiPoly<Coef> sum(vars);
  for (const auto& c : comps) sum += r2.pow(static_cast<unsigned>(c.radial_power)) * c.harmonic;
  return sum;
}

/// A pair of real coordinates (x_j, y_j) forming z_j = x_j + i y_j.
struct ComplexPair {
  std::size_t x;
  std::size_t y;
};

using Bidegree = std::pair<int, int>;

/// Split p into pieces homogeneous of bidegree (p, q) in (z, zbar). Pieces
/// are expressed in the original real variables (with Gaussian rational
/// coefficients) and sum back to p. Variables outside `pairs` are inert.
inline std::map<Bidegree, ComplexPoly> bidegree_split(const ComplexPoly& p, const std::vector<ComplexPair>& pairs) {
  const auto& vars = p.vars();
  const std::size_t m = pairs.size();
  std::vector<bool> paired(vars.size(), false);
  for (const auto& pr : pairs) {
    if (pr.x >= vars.size() || pr.y >= vars.size() || pr.x == pr.y) throw structural_error("bidegree_split: bad pair");
    if (paired[pr.x] || paired[pr.y]) throw structural_error("bidegree_split: variable used twice");
    paired[pr.x] = paired[pr.y] = true;
  }

  // Work variables: z_1..z_m, w_1..w_m (w = zbar), then the inert variables.
  std::vector<std::string> zvars;
  for (std::size_t j = 0; j < m; ++j) zvars.push_back("z" + std::to_string(j + 1) + "#");
  for (std::size_t j = 0; j < m; ++j) zvars.push_back("w" + std::to_string(j + 1) + "#");
  std::vector<std::size_t> inert;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!paired[i]) {
      inert.push_back(i);
      zvars.push_back(vars[i]);
    }

  const ComplexRational half(Rational(1, 2));
  const ComplexRational neg_half_i(Rational(0), Rational(-1, 2));
  std::vector<ComplexPoly> to_z(vars.size(), ComplexPoly(zvars));
  for (std::size_t j = 0; j < m; ++j) {
    ComplexPoly z = ComplexPoly::variable(zvars, zvars[j]);
    ComplexPoly w = ComplexPoly::variable(zvars, zvars[m + j]);
    to_z[pairs[j].x] = (z + w) * half;        // x = (z + zbar)/2
    to_z[pairs[j].y] = (z - w) * neg_half_i;  // y = (z - zbar)/(2i)
  }
  for (std::size_t k = 0; k < inert.size(); ++k) to_z[inert[k]] = ComplexPoly::variable(zvars, zvars[2 * m + k]);
  ComplexPoly pz = compose(p, to_z);

  // Group by bidegree, then map back: z = x + i y, zbar = x - i y.
  std::map<Bidegree, ComplexPoly> grouped;
  for (const auto& [e, c] : pz.terms()) {
    int a = 0, b = 0;
    for (std::size_t j = 0; j < m; ++j) {
      a += e[j];
      b += e[m + j];
    }
    auto it = grouped.try_emplace({a, b}, ComplexPoly(zvars)).first;
    it->second.add_term(e, c);
  }

  std::vector<ComplexPoly> back(zvars.size(), ComplexPoly(vars));
  const ComplexRational i = ComplexRational::i();
  for (std::size_t j = 0; j < m; ++j) {
    ComplexPoly x = ComplexPoly::variable(vars, vars[pairs[j].x]);
    ComplexPoly y = ComplexPoly::variable(vars, vars[pairs[j].y]);
    back[j] = x + y * i;
    back[m + j] = x - y * i;
  }
  for (std::size_t k = 0; k < inert.size(); ++k) back[2 * m + k] = ComplexPoly::variable(vars, vars[inert[k]]);

  std::map<Bidegree, ComplexPoly> out;
  for (const auto& [bd, poly] : grouped) out.emplace(bd, compose(poly, back));
  return out;
}

/// Exact integral of a polynomial over the unit sphere S^{D-1} in the given
/// D ambient coordinates, against the normalized rotation-invariant measure.
/// Other variables must not appear.
template <class Coef>
Coef sphere_average(const MultiPoly<Coef>& p, std::span<const std::size_t> dims) {
  const int D = static_cast<int>(dims.size());
  std::vector<bool> in_dims(p.nvars(), false);
  for (std::size_t i : dims) in_dims[i] = true;
  Coef total(0);
  for (const auto& [e, c] : p.terms()) {
    bool skip = false;
    int half_total = 0;
    Rational num(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!in_dims[i]) {
        if (e[i] != 0) throw structural_error("sphere_average: polynomial depends on a non-sphere variable");
        continue;
      }
      if (e[i] % 2) {
        skip = true;
        break;
      }
      for (int t = e[i] - 1; t > 0; t -= 2) num *= t;  // (e_i - 1)!!
      half_total += e[i] / 2;
    }
    if (skip) continue;
    Rational den(1);
    for (int j = 0; j < half_total; ++j) den *= (D + 2 * j);
    total += c * Coef(Rational(num / den));
  }
  return total;
}

}  // namespace flagsob::exactpoly
