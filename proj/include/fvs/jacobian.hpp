#pragma once

#include <array>
#include <functional>

#include "fvs/mat3.hpp"
#include "fvs/splitting.hpp"
#include "fvs/state_space.hpp"

namespace fvs {

struct JacobianPair {
  Mat3 in_W;  // dF+/dW, columns (rho, a, M)
  Mat3 in_U;  // dF+/dU = dF+/dW * dW/dU
};

// dF+/dW for the subsonic formulas. Throws DomainError for |M| >= 1.
Mat3 jac_plus_primitive(const PrimitiveState& w, const GasParams& gas, Scheme scheme);

// dF+/dU computed as jac_plus_primitive * jac_W_of_U. Throws for |M| >= 1.
Mat3 jac_plus_conservative(const PrimitiveState& w, const GasParams& gas, Scheme scheme);

JacobianPair jacobian_pair(const PrimitiveState& w, const GasParams& gas, Scheme scheme);

// dF+/dU from the simplified closed-form entries, written out independently of
// the product route. The entries depend on (gamma, M, a) only; density cancels.
Mat3 closed_form_jacobian(Scheme scheme, double gamma, double mach, double a);

// dF/dU of the physical flux. Eigenvalues u - a, u, u + a.
Mat3 jac_full(const PrimitiveState& w, const GasParams& gas);

inline constexpr double kDefaultFdStep = 1e-6;
inline constexpr double kRichardsonFdStep = 5e-7;

using Vec3 = std::array<double, 3>;
using Vec3Map = std::function<Vec3(const Vec3&)>;
using ConservativeFluxMap = std::function<Flux3(const ConservativeState&)>;
using PrimitiveFluxMap = std::function<Flux3(const PrimitiveState&)>;

// Central differences, column j perturbed by h * max(1, |x_j|). Second-order
// accurate where f is smooth; straddling a kink degrades to first order.
// Domain errors thrown by f propagate.
Mat3 fd_jacobian(const Vec3Map& f, const Vec3& x, double h = kDefaultFdStep);
Mat3 fd_jacobian(const ConservativeFluxMap& f, const ConservativeState& u,
                 double h = kDefaultFdStep);
Mat3 fd_jacobian(const PrimitiveFluxMap& f, const PrimitiveState& w, double h = kDefaultFdStep);

// ||a - b||_inf / ||a||_inf (absolute when a is zero).
double relative_residual(const Mat3& a, const Mat3& b);

struct FdCheck {
  double residual = 0.0;          // at the default step
  double residual_refined = 0.0;  // at the Richardson step
};

// Compares an analytic dF+/dU against central differences of
// split_flux_plus(conservative_to_primitive(U)) at both steps.
FdCheck fd_check_plus(const PrimitiveState& w, const GasParams& gas, Scheme scheme,
                      double h = kDefaultFdStep, double h_refined = kRichardsonFdStep);

}  // namespace fvs
