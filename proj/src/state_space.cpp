#include "fvs/state_space.hpp"

#include "transform_impl.hpp"

#include <cmath>
#include <sstream>

namespace fvs {

namespace {

double energy_factor(double mach, double gamma) {
  return 1.0 / (gamma * (gamma - 1.0)) + 0.5 * mach * mach;
}

}  // namespace

void require_valid(const GasParams& gas) {
  if (!std::isfinite(gas.gamma) || gas.gamma <= 1.0) {
    std::ostringstream msg;
    msg << "gamma must be finite and > 1 (got " << gas.gamma << ")";
    throw DomainError(msg.str());
  }
}

void require_admissible(const PrimitiveState& w, const GasParams& gas) {
  require_valid(gas);
  if (!std::isfinite(w.rho) || !std::isfinite(w.a) || !std::isfinite(w.mach)) {
    throw DomainError("primitive state has non-finite components");
  }
  if (w.rho <= 0.0) {
    std::ostringstream msg;
    msg << "density must be > 0 (got " << w.rho << ")";
    throw DomainError(msg.str());
  }
  if (w.a <= 0.0) {
    std::ostringstream msg;
    msg << "sound speed must be > 0 (got " << w.a << ")";
    throw DomainError(msg.str());
  }
}

ConservativeState primitive_to_conservative(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  const double q = energy_factor(w.mach, gas.gamma);
  return {w.rho, w.rho * w.a * w.mach, w.rho * w.a * w.a * q};
}

PrimitiveState conservative_to_primitive(const ConservativeState& u, const GasParams& gas) {
  require_valid(gas);
  if (!std::isfinite(u.rho) || !std::isfinite(u.mom) || !std::isfinite(u.energy)) {
    throw DomainError("conservative state has non-finite components");
  }
  if (u.rho <= 0.0) {
    std::ostringstream msg;
    msg << "density must be > 0 (got " << u.rho << ")";
    throw DomainError(msg.str());
  }
  const double vel = u.mom / u.rho;
  const double p = (gas.gamma - 1.0) * (u.energy - 0.5 * u.rho * vel * vel);
  if (!(p > 0.0)) {
    std::ostringstream msg;
    msg << "recovered pressure must be > 0 (got " << p << ")";
    throw DomainError(msg.str());
  }
  const double a = std::sqrt(gas.gamma * p / u.rho);
  return {u.rho, a, vel / a};
}

Mat3 jac_U_of_W(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  const double rho = w.rho, a = w.a, M = w.mach;
  const double q = energy_factor(M, gas.gamma);
  Mat3 j;
  j(0, 0) = 1.0;
  j(1, 0) = a * M;
  j(1, 1) = rho * M;
  j(1, 2) = rho * a;
  j(2, 0) = a * a * q;
  j(2, 1) = 2.0 * rho * a * q;
  j(2, 2) = rho * a * a * M;
  return j;
}

Mat3 jac_W_of_U(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  const auto t = detail::jac_W_of_U_t<double>(w.rho, w.a, w.mach, gas.gamma);
  Mat3 out;
  out.m = t;
  return out;
}

}  // namespace fvs
