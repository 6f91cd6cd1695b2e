#include "fvs/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "transform_impl.hpp"

namespace fvs {

namespace {

void require_subsonic(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  if (!(std::abs(w.mach) < 1.0)) {
    std::ostringstream msg;
    msg << "split-flux Jacobians are defined for the subsonic range |M| < 1 (got M = " << w.mach
        << ")";
    throw DomainError(msg.str());
  }
}

// Entries are evaluated in R (long double below) and rounded once, so the
// cancellation in dF+/dW * dW/dU near M = 1 costs no double-precision digits.
using Real = long double;
using MatR = detail::Mat3T<Real>;

// Mass-flux row shared by all three schemes: K = rho a M+.
struct MassFlux {
  Real k, k_rho, k_a, k_M;
};

MassFlux mass_flux(Real rho, Real a, Real M) {
  const Real mp = (M + 1) * (M + 1) / 4;
  return {rho * a * mp, a * mp, rho * mp, rho * a * (M + 1) / 2};
}

MatR van_leer_primitive(Real rho, Real a, Real M, Real g) {
  const MassFlux k = mass_flux(rho, a, M);
  // A = a D with D = (gamma-1) M + 2; A_rho = 0, A_a = D, A_M = a (gamma - 1).
  const Real d = (g - 1) * M + 2;
  const Real A = a * d, A_a = d, A_M = a * (g - 1);
  const Real c3 = 1 / (2 * (g * g - 1));
  MatR j{};
  j[0] = {k.k_rho, k.k_a, k.k_M};
  j[1][0] = k.k_rho * A / g;
  j[1][1] = (k.k_a * A + k.k * A_a) / g;
  j[1][2] = (k.k_M * A + k.k * A_M) / g;
  j[2][0] = c3 * k.k_rho * A * A;
  j[2][1] = c3 * (k.k_a * A * A + 2 * k.k * A * A_a);
  j[2][2] = c3 * (k.k_M * A * A + 2 * k.k * A * A_M);
  return j;
}

MatR ausm_primitive(Real rho, Real a, Real M, Real g, Scheme scheme) {
  const MassFlux k = mass_flux(rho, a, M);

  // P+ = (rho a^2 / gamma) pi(M)
  Real pi = 0, dpi = 0;
  if (scheme == Scheme::AusmLinear) {
    pi = (1 + M) / 2;
    dpi = Real(0.5);
  } else {
    pi = (M + 1) * (M + 1) * (2 - M) / 4;
    dpi = 3 * (1 - M * M) / 4;
  }
  const Real p_rho = a * a * pi / g, p_a = 2 * rho * a * pi / g, p_M = rho * a * a * dpi / g;

  const Real u = a * M;
  // Specific total enthalpy h = a^2/(gamma-1) + a^2 M^2 / 2.
  const Real h = a * a / (g - 1) + u * u / 2;
  const Real h_a = 2 * a / (g - 1) + a * M * M, h_M = a * a * M;

  MatR j{};
  j[0] = {k.k_rho, k.k_a, k.k_M};
  j[1][0] = k.k_rho * u + p_rho;
  j[1][1] = k.k_a * u + k.k * M + p_a;
  j[1][2] = k.k_M * u + k.k * a + p_M;
  j[2][0] = k.k_rho * h;
  j[2][1] = k.k_a * h + k.k * h_a;
  j[2][2] = k.k_M * h + k.k * h_M;
  return j;
}

MatR primitive_ext(const PrimitiveState& w, Real g, Scheme scheme) {
  if (scheme == Scheme::VanLeer) return van_leer_primitive(w.rho, w.a, w.mach, g);
  return ausm_primitive(w.rho, w.a, w.mach, g, scheme);
}

Mat3 round_to_double(const MatR& m) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = static_cast<double>(m[i][j]);
  return out;
}

}  // namespace

Mat3 jac_plus_primitive(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  require_subsonic(w, gas);
  return round_to_double(primitive_ext(w, gas.gamma, scheme));
}

Mat3 jac_plus_conservative(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  require_subsonic(w, gas);
  const MatR t = detail::jac_W_of_U_t<Real>(w.rho, w.a, w.mach, gas.gamma);
  return round_to_double(detail::multiply(primitive_ext(w, gas.gamma, scheme), t));
}

JacobianPair jacobian_pair(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  return {jac_plus_primitive(w, gas, scheme), jac_plus_conservative(w, gas, scheme)};
}

Mat3 jac_full(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  const double g = gas.gamma;
  const double u = w.velocity();
  const double h = w.specific_enthalpy(gas);
  Mat3 j;
  j(0, 1) = 1.0;
  j(1, 0) = 0.5 * (g - 3.0) * u * u;
  j(1, 1) = (3.0 - g) * u;
  j(1, 2) = g - 1.0;
  j(2, 0) = u * (0.5 * (g - 1.0) * u * u - h);
  j(2, 1) = h - (g - 1.0) * u * u;
  j(2, 2) = g * u;
  return j;
}

Mat3 fd_jacobian(const Vec3Map& f, const Vec3& x, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be > 0");
  Mat3 j;
  for (std::size_t c = 0; c < 3; ++c) {
    const double step = h * std::max(1.0, std::abs(x[c]));
    Vec3 xp = x, xm = x;
    xp[c] += step;
    xm[c] -= step;
    const Vec3 fp = f(xp), fm = f(xm);
    const double width = xp[c] - xm[c];
    for (std::size_t r = 0; r < 3; ++r) j(r, c) = (fp[r] - fm[r]) / width;
  }
  return j;
}

Mat3 fd_jacobian(const ConservativeFluxMap& f, const ConservativeState& u, double h) {
  const Vec3Map g = [&f](const Vec3& x) {
    const Flux3 v = f(ConservativeState{x[0], x[1], x[2]});
    return Vec3{v.mass, v.mom, v.en};
  };
  return fd_jacobian(g, Vec3{u.rho, u.mom, u.energy}, h);
}

Mat3 fd_jacobian(const PrimitiveFluxMap& f, const PrimitiveState& w, double h) {
  const Vec3Map g = [&f](const Vec3& x) {
    const Flux3 v = f(PrimitiveState{x[0], x[1], x[2]});
    return Vec3{v.mass, v.mom, v.en};
  };
  return fd_jacobian(g, Vec3{w.rho, w.a, w.mach}, h);
}

double relative_residual(const Mat3& a, const Mat3& b) {
  const double scale = a.norm_inf();
  const double diff = (a - b).norm_inf();
  return scale > 0.0 ? diff / scale : diff;
}

FdCheck fd_check_plus(const PrimitiveState& w, const GasParams& gas, Scheme scheme, double h,
                      double h_refined) {
  const Mat3 analytic = jac_plus_conservative(w, gas, scheme);
  const ConservativeFluxMap f = [&](const ConservativeState& u) {
    return split_flux_plus(conservative_to_primitive(u, gas), gas, scheme);
  };
  const ConservativeState u = primitive_to_conservative(w, gas);
  return {relative_residual(analytic, fd_jacobian(f, u, h)),
          relative_residual(analytic, fd_jacobian(f, u, h_refined))};
}

}  // namespace fvs
