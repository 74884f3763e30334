#pragma once

#include "vclines/rational.hpp"

#include <optional>
#include <vector>

namespace vclines {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row-echelon form in place; returns the pivot columns. Zero rows are
// dropped, so m.size() == rank on return and the result is unique for a given
// row space.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rational lead = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Canonical kernel basis of the linear map given by rows of m acting on
// R^cols: one vector per free column, with a 1 in that column. m may be empty
// (kernel is all of R^cols).
inline Mat nullspace(Mat m, int cols) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// One solution of a x = b (free variables set to 0), or nullopt if the system
// is inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

}  // namespace vclines
