#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "fvs/mat3.hpp"
#include "fvs/spectral.hpp"
#include "fvs/state_space.hpp"

namespace testing {

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
  return v;
}

inline bool close_rel(double x, double y, double rel, double floor = 0.0) {
  return std::abs(x - y) <= rel * std::max({std::abs(x), std::abs(y), floor});
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  fvs::PrimitiveState subsonic(double rho_lo = 0.1, double rho_hi = 10.0) {
    return {uniform(rho_lo, rho_hi), uniform(rho_lo, rho_hi), uniform(-0.98, 0.98)};
  }
  fvs::GasParams gas() { return {uniform(1.05, 3.0)}; }
};

// Eigenvalues from Eigen's general real eigensolver, sorted by (real, imag).
inline std::array<std::complex<double>, 3> eigen_eigenvalues(const fvs::Mat3& a) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a(i, j);
  Eigen::EigenSolver<Eigen::Matrix3d> es(m, false);
  std::array<std::complex<double>, 3> ev;
  for (int k = 0; k < 3; ++k) ev[k] = es.eigenvalues()(k);
  std::sort(ev.begin(), ev.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return ev;
}

// Coefficients (T, S, D) from det(A - mu I) sampled at mu = 0, 1, -1:
// p(mu) = -mu^3 + T mu^2 - S mu + D.
inline fvs::CharCoeffs charpoly_by_interpolation(const fvs::Mat3& a) {
  auto p = [&](double mu) {
    fvs::Mat3 b = a;
    for (int k = 0; k < 3; ++k) b(k, k) -= mu;
    return b.det();
  };
  const double p0 = p(0.0), p1 = p(1.0), pm = p(-1.0);
  // q(mu) = p(mu) + mu^3 = T mu^2 - S mu + D
  const double q1 = p1 + 1.0, qm = pm - 1.0;
  const double T = 0.5 * (q1 + qm) - p0;
  const double S = -0.5 * (q1 - qm);
  return {T, S, p0};
}

}  // namespace testing
