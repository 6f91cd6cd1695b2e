#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace fvs {

// Dense 3x3 matrix. Row index is the flux (or output) component, column index
// the differentiation variable, both ordered (mass, momentum, energy) or
// (rho, a, M). Indices are zero-based.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  static constexpr Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  constexpr double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  constexpr double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  // Induced infinity norm (max absolute row sum).
  double norm_inf() const {
    double best = 0.0;
    for (const auto& row : m) {
      const double s = std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]);
      if (s > best) best = s;
    }
    return best;
  }

  double max_abs() const {
    double best = 0.0;
    for (const auto& row : m)
      for (double v : row) best = std::max(best, std::abs(v));
    return best;
  }

  bool all_finite() const {
    for (const auto& row : m)
      for (double v : row)
        if (!std::isfinite(v)) return false;
    return true;
  }

  friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return r;
  }

  friend constexpr Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }

  friend constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
};

}  // namespace fvs
