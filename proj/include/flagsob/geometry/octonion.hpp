#pragma once

#include <array>
#include <span>

namespace flagsob::geometry {

using Quaternion = std::array<double, 4>;
using Octonion = std::array<double, 8>;

/// Hamilton product, basis (1, i, j, k).
inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline Quaternion quat_conj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

/// Two standard multiplication tables for the octonions. They define
/// isomorphic algebras related by a signed permutation of e_1..e_7.
enum class OctonionTable {
  cayley_dickson,  // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) on quaternion pairs
  fano,            // e_i e_{i+1} = e_{i+3}, indices mod 7
};

namespace detail {

struct FanoTable {
  // product e_a e_b = sign[a][b] * e_{index[a][b]}
  int index[8][8];
  int sign[8][8];

  constexpr FanoTable() : index{}, sign{} {
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        index[a][b] = 0;
        sign[a][b] = 0;
      }
    for (int a = 0; a < 8; ++a) {
      index[0][a] = a;
      sign[0][a] = 1;
      index[a][0] = a;
      sign[a][0] = 1;
    }
    for (int a = 1; a < 8; ++a) {
      index[a][a] = 0;
      sign[a][a] = -1;
    }
    for (int i = 0; i < 7; ++i) {
      const int t[3] = {i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1};
      for (int r = 0; r < 3; ++r) {
        const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
        index[a][b] = c;
        sign[a][b] = 1;
        index[b][a] = c;
        sign[b][a] = -1;
      }
    }
  }
};

inline constexpr FanoTable fano_table{};

}  // namespace detail

inline Octonion oct_conj(const Octonion& a) {
  Octonion r;
  r[0] = a[0];
  for (int i = 1; i < 8; ++i) r[i] = -a[i];
  return r;
}

inline Octonion oct_mul(const Octonion& x, const Octonion& y, OctonionTable table = OctonionTable::cayley_dickson) {
  Octonion r{};
  if (table == OctonionTable::fano) {
    for (int a = 0; a < 8; ++a) {
      if (x[a] == 0.0) continue;
      for (int b = 0; b < 8; ++b)
        r[detail::fano_table.index[a][b]] += detail::fano_table.sign[a][b] * x[a] * y[b];
    }
    return r;
  }
  const Quaternion a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quaternion c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quaternion p = quat_mul(a, c), q = quat_mul(quat_conj(d), b);
  const Quaternion s = quat_mul(d, a), u = quat_mul(b, quat_conj(c));
  for (int i = 0; i < 4; ++i) {
    r[i] = p[i] - q[i];
    r[4 + i] = s[i] + u[i];
  }
  return r;
}

inline double oct_norm_sq(const Octonion& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline Octonion oct_unit(int i) {
  Octonion e{};
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

}  // namespace flagsob::geometry
