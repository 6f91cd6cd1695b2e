#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fvs/state_space.hpp"

namespace fvs {

enum class Scheme { VanLeer, AusmLinear, AusmSecond };

inline constexpr std::array<Scheme, 3> kAllSchemes = {Scheme::VanLeer, Scheme::AusmLinear,
                                                      Scheme::AusmSecond};

// CLI spellings: "vanleer", "ausm-lin", "ausm-2nd".
std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct Flux3 {
  double mass = 0.0;
  double mom = 0.0;
  double en = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? mass : (i == 1 ? mom : en); }

  friend Flux3 operator+(const Flux3& a, const Flux3& b) {
    return {a.mass + b.mass, a.mom + b.mom, a.en + b.en};
  }
  friend Flux3 operator-(const Flux3& a, const Flux3& b) {
    return {a.mass - b.mass, a.mom - b.mom, a.en - b.en};
  }
  friend Flux3 operator*(double s, const Flux3& f) { return {s * f.mass, s * f.mom, s * f.en}; }
};

// Physical flux (rho u, rho u^2 + p, u H), H per unit volume.
Flux3 full_flux(const PrimitiveState& w, const GasParams& gas);

struct MachSplit {
  double plus;
  double minus;
};

// M+ = (M+1)^2/4, M- = -(M-1)^2/4 for |M| <= 1; (M, 0) for M > 1 and (0, M)
// for M < -1.
MachSplit mach_split(double mach);

enum class PressureOrder { Linear, Second };

struct PressureSplit {
  double plus;
  double minus;
};

// Linear:  P+ = p(1+M)/2,            P- = p(1-M)/2.
// Second:  P+ = p(M+1)^2(2-M)/4,     P- = p(M-1)^2(2+M)/4.
// Supersonic: all pressure goes to the upwind side.
PressureSplit pressure_split(double mach, double p, PressureOrder order);

// Positive split flux. Sonic points belong to the subsonic formulas; for M > 1
// it is the full flux and for M < -1 it vanishes.
Flux3 split_flux_plus(const PrimitiveState& w, const GasParams& gas, Scheme scheme);

// F- = F - F+ (subsonic), 0 for M > 1, F for M < -1.
Flux3 split_flux_minus(const PrimitiveState& w, const GasParams& gas, Scheme scheme);

}  // namespace fvs
