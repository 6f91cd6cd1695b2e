#include "fvs/splitting.hpp"

namespace fvs {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::VanLeer:
      return "vanleer";
    case Scheme::AusmLinear:
      return "ausm-lin";
    case Scheme::AusmSecond:
      return "ausm-2nd";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

Flux3 full_flux(const PrimitiveState& w, const GasParams& gas) {
  require_admissible(w, gas);
  const double u = w.velocity();
  const double p = w.pressure(gas);
  return {w.rho * u, w.rho * u * u + p, u * w.total_enthalpy(gas)};
}

MachSplit mach_split(double mach) {
  if (mach > 1.0) return {mach, 0.0};
  if (mach < -1.0) return {0.0, mach};
  return {0.25 * (mach + 1.0) * (mach + 1.0), -0.25 * (mach - 1.0) * (mach - 1.0)};
}

PressureSplit pressure_split(double mach, double p, PressureOrder order) {
  if (mach > 1.0) return {p, 0.0};
  if (mach < -1.0) return {0.0, p};
  if (order == PressureOrder::Linear) {
    return {0.5 * p * (1.0 + mach), 0.5 * p * (1.0 - mach)};
  }
  return {0.25 * p * (mach + 1.0) * (mach + 1.0) * (2.0 - mach),
          0.25 * p * (mach - 1.0) * (mach - 1.0) * (2.0 + mach)};
}

namespace {

Flux3 subsonic_plus(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  const double g = gas.gamma;
  const double a = w.a;
  const double k = w.rho * a * mach_split(w.mach).plus;
  if (scheme == Scheme::VanLeer) {
    const double d = (g - 1.0) * w.mach + 2.0;
    return {k, k * a * d / g, k * a * a * d * d / (2.0 * (g * g - 1.0))};
  }
  // AUSM convects the specific total enthalpy; the pressure split only
  // touches the momentum component.
  const auto order = scheme == Scheme::AusmLinear ? PressureOrder::Linear : PressureOrder::Second;
  const double p_plus = pressure_split(w.mach, w.pressure(gas), order).plus;
  return {k, k * w.velocity() + p_plus, k * w.specific_enthalpy(gas)};
}

}  // namespace

Flux3 split_flux_plus(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  require_admissible(w, gas);
  if (w.mach > 1.0) return full_flux(w, gas);
  if (w.mach < -1.0) return {};
  return subsonic_plus(w, gas, scheme);
}

Flux3 split_flux_minus(const PrimitiveState& w, const GasParams& gas, Scheme scheme) {
  require_admissible(w, gas);
  if (w.mach > 1.0) return {};
  if (w.mach < -1.0) return full_flux(w, gas);
  return full_flux(w, gas) - subsonic_plus(w, gas, scheme);
}

}  // namespace fvs
