// Simplified entries of dF+/dU for the three splittings. Kept deliberately
// independent of the dF+/dW * dW/dU product so the two can be cross-checked.

#include <cmath>
#include <sstream>

#include "fvs/jacobian.hpp"
#include "transform_impl.hpp"

namespace fvs {

namespace {

// Evaluated in extended precision and rounded once on return.
using Real = long double;
using MatR = detail::Mat3T<Real>;

// Row 1 is the mass flux rho a M+, identical for every scheme.
void mass_row(MatR& j, Real g, Real M, Real a) {
  const Real gg = (g - 1.0) * g;
  j[0][0] = -a * (M * M - 1.0) * (gg * M * M + 2.0) / 16.0;
  j[0][1] = (gg * M * M * M + (-g * g + g + 4.0) * M + 4.0) / 8.0;
  j[0][2] = -gg * (M - 1.0) * (M + 1.0) / (8.0 * a);
}

// Van Leer momentum row; the second-order AUSM momentum flux is identical.
void van_leer_momentum_row(MatR& j, Real g, Real M, Real a) {
  const Real g1 = g - 1.0;
  const Real c = g1 * g1 * g;
  const Real M2 = M * M, M3 = M2 * M, M4 = M2 * M2;
  j[1][0] = -a * a * M * (M + 1.0) *
            (2.0 * (g + 3.0) + c * M3 - c * M2 - 2.0 * (2.0 * g * g - 5.0 * g + 3.0) * M) /
            (16.0 * g);
  j[1][1] = a *
            (2.0 * (g + 3.0) + c * M4 - (g * g * g + 2.0 * g * g - 9.0 * g + 6.0) * M2 -
             4.0 * (g - 3.0) * g * M) /
            (8.0 * g);
  j[1][2] = -g1 * (M + 1.0) * (g1 * M2 - g * M + M - 4.0) / 8.0;
}

// AUSM energy row (both pressure splittings), convecting specific enthalpy.
void ausm_energy_row(MatR& j, Real g, Real M, Real a) {
  const Real g1 = g - 1.0;
  const Real M2 = M * M, M3 = M2 * M, M4 = M2 * M2, M5 = M4 * M;
  j[2][0] = -a * a * a * (M + 1.0) *
            (g1 * g1 * g * M5 - g1 * g1 * g * M4 - 2.0 * (g * g - 6.0 * g + 5.0) * M3 -
             6.0 * g1 * g1 * M2 + 12.0 * M + 4.0) /
            (32.0 * g1);
  j[2][1] = a * a * (M + 1.0) *
            (8.0 / g1 + g1 * g * M4 - g1 * g * M3 - 2.0 * (g - 4.0) * M2 + (4.0 - 6.0 * g) * M) /
            16.0;
  j[2][2] = a * g * (-(g1 * M4) + (g + 1.0) * M2 + 8.0 * M + 6.0) / 16.0;
}

MatR van_leer(Real g, Real M, Real a) {
  MatR j{};
  mass_row(j, g, M, a);
  van_leer_momentum_row(j, g, M, a);
  const Real g1 = g - 1.0;
  const Real c = g1 * g1 * g1 * g;
  const Real M2 = M * M, M3 = M2 * M, M4 = M2 * M2, M5 = M4 * M;
  j[2][0] = -a * a * a * (M + 1.0) *
            (c * M5 - c * M4 + (-8.0 * g * g * g + 22.0 * g * g - 24.0 * g + 10.0) * M3 +
             (-6.0 * g * g + 32.0 * g - 26.0) * M2 + 8.0 * (2.0 * g + 1.0) * M + 8.0) /
            (32.0 * (g * g - 1.0));
  j[2][1] = a * a * (M + 1.0) *
            (8.0 * (g + 1.0) + c * M4 - c * M3 -
             4.0 * (2.0 * g * g * g - 5.0 * g * g + 5.0 * g - 2.0) * M2 -
             4.0 * (2.0 * g * g - 7.0 * g + 5.0) * M) /
            (16.0 * (g * g - 1.0));
  j[2][2] = -a * g * (M + 1.0) * (g1 * g1 * M3 - g1 * g1 * M2 + (4.0 - 8.0 * g) * M - 12.0) /
            (16.0 * (g + 1.0));
  return j;
}

MatR ausm_linear(Real g, Real M, Real a) {
  MatR j{};
  mass_row(j, g, M, a);
  const Real M2 = M * M;
  // Shared bracket of the (2,1) and (2,2) entries.
  const Real b = -g * g * M * (M2 * M + M + 4.0) + g * g * g * M2 * (M2 - 1.0) +
                   2.0 * g * (4.0 * M2 + 6.0 * M + 1.0) + 4.0;
  j[1][0] = -a * a * M * b / (16.0 * g);
  j[1][1] = a * b / (8.0 * g);
  j[1][2] = -(g - 1.0) * (g * M2 * M - (g + 2.0) * M - 4.0) / 8.0;
  ausm_energy_row(j, g, M, a);
  return j;
}

MatR ausm_second(Real g, Real M, Real a) {
  MatR j{};
  mass_row(j, g, M, a);
  van_leer_momentum_row(j, g, M, a);
  ausm_energy_row(j, g, M, a);
  return j;
}

}  // namespace

Mat3 closed_form_jacobian(Scheme scheme, double gamma, double mach, double a) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw DomainError("gamma must be > 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("sound speed must be > 0");
  if (!(std::abs(mach) < 1.0)) {
    std::ostringstream msg;
    msg << "split-flux Jacobians are defined for the subsonic range |M| < 1 (got M = " << mach
        << ")";
    throw DomainError(msg.str());
  }
  MatR j{};
  switch (scheme) {
    case Scheme::VanLeer:
      j = van_leer(gamma, mach, a);
      break;
    case Scheme::AusmLinear:
      j = ausm_linear(gamma, mach, a);
      break;
    case Scheme::AusmSecond:
      j = ausm_second(gamma, mach, a);
      break;
  }
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = static_cast<double>(j[r][c]);
  return out;
}

}  // namespace fvs
