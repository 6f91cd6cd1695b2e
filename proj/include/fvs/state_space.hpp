#pragma once

#include <stdexcept>
#include <string>

#include "fvs/mat3.hpp"

namespace fvs {

// Raised when an argument lies outside an operation's mathematical domain
// (non-physical state, gamma <= 1, supersonic Mach where subsonic is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GasParams {
  double gamma = 1.4;  // c_p / c_v
};

// Throws DomainError unless gamma is finite and > 1.
void require_valid(const GasParams& gas);

// Primitive variables W = (rho, a, M). Derived quantities are computed on
// demand so a state can never disagree with itself.
struct PrimitiveState {
  double rho = 1.0;
  double a = 1.0;
  double mach = 0.0;

  double velocity() const { return a * mach; }
  double pressure(const GasParams& gas) const { return rho * a * a / gas.gamma; }
  // Internal energy per unit volume, p = (gamma - 1) e.
  double internal_energy(const GasParams& gas) const {
    return pressure(gas) / (gas.gamma - 1.0);
  }
  double total_energy(const GasParams& gas) const {
    const double u = velocity();
    return internal_energy(gas) + 0.5 * rho * u * u;
  }
  // Total enthalpy per unit volume, H = E + p.
  double total_enthalpy(const GasParams& gas) const {
    return total_energy(gas) + pressure(gas);
  }
  // Specific total enthalpy (E + p) / rho = a^2/(gamma-1) + u^2/2.
  double specific_enthalpy(const GasParams& gas) const {
    return total_enthalpy(gas) / rho;
  }
};

// Conservative variables U = (rho, rho u, E).
struct ConservativeState {
  double rho = 1.0;
  double mom = 0.0;
  double energy = 1.0;

  double velocity() const { return mom / rho; }
  double pressure(const GasParams& gas) const {
    return (gas.gamma - 1.0) * (energy - 0.5 * mom * mom / rho);
  }
};

// Throws DomainError if rho <= 0, a <= 0, any component is non-finite, or the
// gas is invalid.
void require_admissible(const PrimitiveState& w, const GasParams& gas);

// U(W) = (rho, rho a M, rho a^2 Q) with Q = 1/(gamma(gamma-1)) + M^2/2.
ConservativeState primitive_to_conservative(const PrimitiveState& w, const GasParams& gas);

// Analytic inverse; rejects rho <= 0 and non-positive recovered pressure.
PrimitiveState conservative_to_primitive(const ConservativeState& u, const GasParams& gas);

// dU/dW. det = -2 rho^2 a^2 / (gamma (gamma - 1)).
Mat3 jac_U_of_W(const PrimitiveState& w, const GasParams& gas);

// dW/dU, the closed-form inverse of jac_U_of_W.
Mat3 jac_W_of_U(const PrimitiveState& w, const GasParams& gas);

}  // namespace fvs
