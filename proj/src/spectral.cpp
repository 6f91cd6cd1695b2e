#include "fvs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fvs/state_space.hpp"

namespace fvs {

namespace {

// Neumaier-compensated sum.
template <std::size_t N>
double compensated_sum(const std::array<double, N>& terms) {
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  return sum + comp;
}

CharCoeffs van_leer_coeffs(double g, double M, double a) {
  const double M2 = M * M;
  const double pt = 9.0 * g * (g + 1.0) - (g - 1.0) * g * M2 * M2 +
                    2.0 * (2.0 * g * g + g - 3.0) * M2 + 12.0 * g * (g + 1.0) * M + 6.0;
  const double ps = -3.0 * g * g - 14.0 * g + 4.0 * (g - 1.0) * g * M2 +
                    (-9.0 * g * g + 10.0 * g + 3.0) * M - 3.0;
  const double mp1 = M + 1.0;
  return {a * pt / (8.0 * g * (g + 1.0)),
          -a * a * mp1 * mp1 * mp1 * ps / (32.0 * g * (g + 1.0)), 0.0};
}

CharCoeffs ausm_linear_coeffs(double g, double M, double a) {
  const double M2 = M * M;
  const double pt = -g * g * (M2 - 3.0) + g * (7.0 * M2 + 12.0 * M + 3.0) + 4.0;
  const double mp1 = M + 1.0;
  const double mp2 = mp1 * mp1;
  // The leading minus makes S agree with the principal-minor sum of dF+/dU.
  return {a * pt / (8.0 * g), -a * a * mp2 * ausm_linear_s_bracket(g, M) / (32.0 * g),
          -a * a * a * mp2 * mp2 * ausm_linear_det_factor(g, M) / 64.0};
}

CharCoeffs ausm_second_coeffs(double g, double M, double a) {
  const double M2 = M * M;
  const double pt = 3.0 * (g * g + g + 2.0) - (g - 1.0) * g * M2 * M2 -
                    2.0 * (g * g - 4.0 * g + 3.0) * M2 + 12.0 * g * M;
  const double r = -5.0 * g * g - 2.0 * g + (g - 1.0) * g * M2 * M + (g - 1.0) * g * M2 +
                   (3.0 * g * g - 4.0 * g + 3.0) * M - 3.0;
  const double mp1 = M + 1.0;
  const double mp3 = mp1 * mp1 * mp1;
  return {a * pt / (8.0 * g), -a * a * mp3 * r / (32.0 * g),
          -a * a * a * (g - 1.0) * (M - 1.0) * mp3 * mp3 / 64.0};
}

CharCoeffs coeffs_unchecked(Scheme scheme, double g, double M, double a) {
  switch (scheme) {
    case Scheme::VanLeer:
      return van_leer_coeffs(g, M, a);
    case Scheme::AusmLinear:
      return ausm_linear_coeffs(g, M, a);
    case Scheme::AusmSecond:
      return ausm_second_coeffs(g, M, a);
  }
  return {};
}

void require_spectral_domain(double gamma, double mach, double a) {
  if (!std::isfinite(gamma) || !(gamma > 1.0)) {
    std::ostringstream msg;
    msg << "gamma must be > 1 (got " << gamma << ")";
    throw DomainError(msg.str());
  }
  if (!std::isfinite(a) || !(a > 0.0)) {
    std::ostringstream msg;
    msg << "sound speed must be > 0 (got " << a << ")";
    throw DomainError(msg.str());
  }
  if (!(std::abs(mach) < 1.0)) {
    std::ostringstream msg;
    msg << "spectral analysis is restricted to the subsonic range |M| < 1 (got M = " << mach
        << ")";
    throw DomainError(msg.str());
  }
}

double cubic_value(const CharCoeffs& c, double mu) { return ((mu - c.T) * mu + c.S) * mu - c.D; }

double newton_polish(const CharCoeffs& c, double mu) {
  const double f = cubic_value(c, mu);
  const double df = (3.0 * mu - 2.0 * c.T) * mu + c.S;
  if (f == 0.0 || df == 0.0) return mu;
  const double next = mu - f / df;
  return std::abs(cubic_value(c, next)) < std::abs(f) ? next : mu;
}

}  // namespace

CharCoeffs matrix_invariants(const Mat3& a) {
  const double minors = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) +
                        (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
                        (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
  return {a.trace(), minors, a.det()};
}

CharCoeffs closed_form_coeffs(Scheme scheme, double gamma, double mach, double a) {
  require_spectral_domain(gamma, mach, a);
  return coeffs_unchecked(scheme, gamma, mach, a);
}

std::string_view to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::AllPositive:
      return "all_positive";
    case SpectrumClass::ZeroPlusTwoPositive:
      return "zero_plus_two_positive";
    case SpectrumClass::MixedSign:
      return "mixed_sign";
    case SpectrumClass::ComplexPair:
      return "complex_pair";
    case SpectrumClass::OtherReal:
      return "other_real";
  }
  return "unknown";
}

double discriminant_tolerance(const CharCoeffs& c) {
  const double scale = c.T * c.T + std::abs(c.S);
  return 1e-12 * scale * scale * scale;
}

double cubic_discriminant(const CharCoeffs& c) {
  const double T = c.T, S = c.S, D = c.D;
  const std::array<double, 5> terms = {18.0 * T * S * D, -4.0 * T * T * T * D, T * T * S * S,
                                       -4.0 * S * S * S, -27.0 * D * D};
  return compensated_sum(terms);
}

SpectrumReport solve_cubic(const CharCoeffs& c) {
  SpectrumReport report;
  report.discriminant = cubic_discriminant(c);

  const double shift = c.T / 3.0;
  // Depressed cubic t^3 + p t + q = 0 with mu = t + T/3.
  const double p = c.S - c.T * c.T / 3.0;
  const double q = -2.0 * c.T * c.T * c.T / 27.0 + c.T * c.S / 3.0 - c.D;

  if (report.discriminant >= -discriminant_tolerance(c)) {
    std::array<double, 3> roots{};
    if (p >= 0.0) {
      roots.fill(std::cbrt(-q) + shift);
    } else {
      const double r = 2.0 * std::sqrt(-p / 3.0);
      const double arg = std::clamp(1.5 * q / p * std::sqrt(-3.0 / p), -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        roots[k] = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift;
    }
    for (double& mu : roots) mu = newton_polish(c, mu);
    std::sort(roots.begin(), roots.end());

    const double radius = std::max({std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])});
    const double zero_tol = kZeroEigenTolerance * radius;
    int zeros = 0, positive = 0, negative = 0;
    for (int k = 0; k < 3; ++k) {
      report.eigenvalues[k] = roots[k];
      if (std::abs(roots[k]) < zero_tol)
        ++zeros;
      else if (roots[k] > 0.0)
        ++positive;
      else
        ++negative;
    }
    if (positive == 3)
      report.classification = SpectrumClass::AllPositive;
    else if (zeros == 1 && positive == 2)
      report.classification = SpectrumClass::ZeroPlusTwoPositive;
    else if (positive > 0 && negative > 0)
      report.classification = SpectrumClass::MixedSign;
    else
      report.classification = SpectrumClass::OtherReal;
    return report;
  }

  // One real root; stable Cardano form.
  const double sq = std::sqrt(0.25 * q * q + p * p * p / 27.0);
  const double big = -std::copysign(std::cbrt(0.5 * std::abs(q) + sq), q);
  const double t = big + (big != 0.0 ? -p / (3.0 * big) : 0.0);
  const double real_root = newton_polish(c, t + shift);
  const double sum = c.T - real_root;
  const double prod = c.S - real_root * sum;
  const double re = 0.5 * sum;
  const double im = std::sqrt(std::max(0.0, prod - re * re));
  report.eigenvalues = {std::complex<double>(real_root, 0.0), std::complex<double>(re, im),
                        std::complex<double>(re, -im)};
  report.classification = SpectrumClass::ComplexPair;
  return report;
}

double h_vanleer(double g, double M) {
  const double g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
  const std::array<double, 7> coeff = {
      57.0 * g4 + 26.0 * g3 + 53.0 * g2 + 84.0 * g + 36.0,
      -42.0 * g4 - 20.0 * g3 - 50.0 * g2 - 72.0 * g - 72.0,
      -13.0 * g4 + 26.0 * g3 + 39.0 * g2 - 24.0 * g + 36.0,
      20.0 * g4 - 44.0 * g2 + 24.0 * g,
      -5.0 * g4 - 2.0 * g3 + 19.0 * g2 - 12.0 * g,
      -2.0 * g4 + 4.0 * g3 - 2.0 * g2,
      (g - 1.0) * (g - 1.0) * g2,
  };
  double acc = 0.0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * M + *it;
  return acc;
}

double vanleer_discriminant(double gamma, double mach, double a) {
  const double g = gamma;
  const double s = a * (mach + 1.0) / (8.0 * g * (g + 1.0));
  return s * s * h_vanleer(g, mach);
}

double ausm2_discriminant(double gamma, double mach, double a) {
  return cubic_discriminant(ausm_second_coeffs(gamma, mach, a));
}

SpectrumReport classify_spectrum(Scheme scheme, double gamma, double mach, double a) {
  require_spectral_domain(gamma, mach, a);
  if (gamma > 3.0) {
    std::ostringstream msg;
    msg << "spectrum classification requires gamma in (1, 3] (got " << gamma << ")";
    throw DomainError(msg.str());
  }
  return solve_cubic(coeffs_unchecked(scheme, gamma, mach, a));
}

double ausm_linear_s_bracket(double g, double M) {
  return (3.0 * g * g - 9.0 * g) * M * M + (-2.0 * g * g - 10.0 * g) * M + (-5.0 * g * g + g - 2.0);
}

double ausm_linear_det_factor(double g, double M) {
  return (g - 2.0) * M * M - (g + 1.0) * M + (2.0 - g);
}

double ausm_linear_s_root(double gamma) {
  if (!(gamma > 1.0 && gamma < 3.0)) {
    std::ostringstream msg;
    msg << "the sign-change root of P_S is located for 1 < gamma < 3 (got " << gamma << ")";
    throw DomainError(msg.str());
  }
  const double g = gamma;
  const double qa = 3.0 * g * g - 9.0 * g;
  const double qb = -2.0 * g * g - 10.0 * g;
  const double qc = -5.0 * g * g + g - 2.0;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) throw std::runtime_error("P_S has no real root");
  const double half = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
  for (double root : {half / qa, qc / half}) {
    if (root > -1.0 && root < 0.0) return root;
  }
  throw std::runtime_error("no root of P_S inside (-1, 0)");
}

}  // namespace fvs
