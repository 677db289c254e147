#pragma once

#include "orbithk/orbit.hpp"

namespace orbithk {

/// G-invariant potential family rho'(eta) = sqrt(lambda^2 eta + c)/(2 eta).
/// Only the derivatives rho', rho'' enter any formula; rho itself is never
/// materialized.
struct PotentialFamily {
  double lambda_sq = 0.0;
  double c = 0.0;

  double rho_p(double eta) const;
  double rho_pp(double eta) const;
};

/// lambda^2 = eta(e_theta) = kappa(e_theta, f_theta).
long long lambda_squared(const LieAlgebra& L);

/// omega_I(xi_A, xi_B) = 2 Im(rho' <xi_A, s xi_B> + rho'' <xi_A, sX><s xi_B, X>).
double kahler_form_I(const LieAlgebra& L, const OrbitPoint& X,
                     const PotentialFamily& pf, const Element& A, const Element& B);

/// g(xi_A, xi_B) = 2 Re(rho' <xi_A, s xi_B> + rho'' <xi_A, sX><s xi_B, X>).
double metric(const LieAlgebra& L, const OrbitPoint& X, const PotentialFamily& pf,
              const Element& A, const Element& B);

// Tangent-vector forms of the same bilinear expressions (the formulas depend
// on A, B only through xi_A, xi_B).
double metric_tangent(const LieAlgebra& L, const OrbitPoint& X, double rho_p,
                      double rho_pp, const Element& v, const Element& w);
double kahler_form_I_tangent(const LieAlgebra& L, const OrbitPoint& X,
                             double rho_p, double rho_pp, const Element& v,
                             const Element& w);

/// rho' > max{0, -eta rho''}: positive-definiteness of g.
bool positivity_condition(const PotentialFamily& pf, double eta_val);
bool positivity_condition_general(double rho_p, double rho_pp, double eta_val);

/// J xi_A = -2 rho' [X, s xi_A] - 2 rho'' <s xi_A, X> [X, s X].
Element apply_J(const LieAlgebra& L, const OrbitPoint& X, const PotentialFamily& pf,
                const Element& A);
Element apply_J_tangent(const LieAlgebra& L, const OrbitPoint& X,
                        const PotentialFamily& pf, const Element& xi);

/// Quaternion-identity verification report: J tangency, J^2 = -Id, JI = -K,
/// J-invariance of g, omega_J + i omega_K = omega_c, Gram positivity.
VerifyReport verify_quaternionic(const LieAlgebra& L, const OrbitPoint& X,
                                 const PotentialFamily& pf, int trials,
                                 std::uint64_t seed);

/// max over the V (x) S^1 directions of ||J^2 xi + xi|| / ||xi||; equals
/// c/(lambda^2 eta).  Rejected for sl(2), whose complement is empty.
double uniqueness_deviation(const LieAlgebra& L, const OrbitPoint& X, double c);

/// Residuals of the d-eta, dId-eta and d-eta^Id-eta formulas against exact
/// polynomial differentiation along the vector-field flows.
VerifyReport derivative_identities(const LieAlgebra& L, const OrbitPoint& X,
                                   const Element& A, const Element& B);

/// omega_I assembled as -1/2 rho' dId-eta - 1/2 rho'' d-eta^Id-eta with both
/// ingredients taken from the derivative oracle, not from the closed form.
double omega_I_assembled(const LieAlgebra& L, const OrbitPoint& X,
                         const PotentialFamily& pf, const Element& A,
                         const Element& B);

}  // namespace orbithk
