#pragma once

#include <array>

namespace fvs::detail {

template <class R>
using Mat3T = std::array<std::array<R, 3>, 3>;

// dW/dU in precision R.
template <class R>
Mat3T<R> jac_W_of_U_t(R rho, R a, R M, R g) {
  const R gg = (g - 1) * g;
  Mat3T<R> t{};
  t[0][0] = 1;
  t[1][0] = a * (gg * M * M - 2) / (4 * rho);
  t[1][1] = -gg * M / (2 * rho);
  t[1][2] = gg / (2 * a * rho);
  t[2][0] = -(gg * M * M * M + 2 * M) / (4 * rho);
  t[2][1] = (gg * M * M + 2) / (2 * a * rho);
  t[2][2] = -gg * M / (2 * a * a * rho);
  return t;
}

template <class R>
Mat3T<R> multiply(const Mat3T<R>& a, const Mat3T<R>& b) {
  Mat3T<R> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

}  // namespace fvs::detail
