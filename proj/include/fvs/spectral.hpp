#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "fvs/mat3.hpp"
#include "fvs/splitting.hpp"

namespace fvs {

// Coefficients of the characteristic equation mu^3 - T mu^2 + S mu - D = 0:
// trace, sum of the 2x2 principal minors, determinant.
struct CharCoeffs {
  double T = 0.0;
  double S = 0.0;
  double D = 0.0;
};

CharCoeffs matrix_invariants(const Mat3& a);

// Simplified (T, S, D) of dF+/dU. Requires gamma > 1, |M| < 1, a > 0.
// Van Leer has D = 0 identically.
CharCoeffs closed_form_coeffs(Scheme scheme, double gamma, double mach, double a);

enum class SpectrumClass {
  AllPositive,
  ZeroPlusTwoPositive,
  MixedSign,
  ComplexPair,
  OtherReal,  // real spectrum matching none of the above (e.g. all negative)
};

std::string_view to_string(SpectrumClass c);

struct SpectrumReport {
  // Real roots ascending, or {real root, conjugate pair (+imag first)}.
  std::array<std::complex<double>, 3> eigenvalues{};
  SpectrumClass classification = SpectrumClass::OtherReal;
  double discriminant = 0.0;  // cubic discriminant of the coefficients
};

// |mu| < kZeroEigenTolerance * max_k |mu_k| counts as a zero eigenvalue.
inline constexpr double kZeroEigenTolerance = 1e-9;

// Absolute tolerance for sign decisions on the cubic discriminant; scales as
// (T^2 + |S|)^3 so it has the discriminant's units.
double discriminant_tolerance(const CharCoeffs& c);

// 18TSD - 4T^3 D + T^2 S^2 - 4S^3 - 27D^2, summed with error compensation.
double cubic_discriminant(const CharCoeffs& c);

// Trigonometric method when all roots are real, Cardano otherwise; each root
// gets one Newton polish.
SpectrumReport solve_cubic(const CharCoeffs& c);

// Degree-6 factor of the Van Leer quadratic discriminant:
// T^2 - 4S = a^2 (M+1)^2 H / (64 gamma^2 (gamma+1)^2).
double h_vanleer(double gamma, double mach);
double vanleer_discriminant(double gamma, double mach, double a);

// Cubic discriminant of the second-order AUSM coefficients. Defined on the
// closed box |M| <= 1 (no subsonic guard) so scans can reach the boundary.
double ausm2_discriminant(double gamma, double mach, double a = 1.0);

// Eigenvalues and sign class of dF+/dU from the closed-form coefficients.
// Requires gamma in (1, 3], |M| < 1, a > 0.
SpectrumReport classify_spectrum(Scheme scheme, double gamma, double mach, double a);

// AUSM linear: S = -a^2 (M+1)^2 / (32 gamma) * P_S(M) with
// P_S = (3g^2 - 9g) M^2 + (-2g^2 - 10g) M + (-5g^2 + g - 2).
double ausm_linear_s_bracket(double gamma, double mach);

// AUSM linear: D = -a^3 (M+1)^4 / 64 * Q(M), Q = (g-2) M^2 - (g+1) M + (2-g).
double ausm_linear_det_factor(double gamma, double mach);

// The root of P_S inside (-1, 0). Requires 1 < gamma < 3.
double ausm_linear_s_root(double gamma);

}  // namespace fvs
