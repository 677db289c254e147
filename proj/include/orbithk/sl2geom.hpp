#pragma once

#include "orbithk/chevalley.hpp"

#include <Eigen/Dense>

namespace orbithk {

using MatrixXll = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Irreducible sl(2) representation S^k: exact (k+1)x(k+1) integer matrices,
/// basis ordered by weight k, k-2, ..., -k top to bottom.
struct SkRep {
  int k = 0;
  MatrixXll phi_E, phi_H, phi_F;
};

SkRep sk_matrices(int k);

/// Residual of 2(eta rho'^2 + eta^2 rho' rho'') = 1 for the sl(2) family
/// rho' = sqrt(eta + c)/eta.
double ode_residual(double eta_val, double c_sl2);
double ode_residual_general(double eta_val, double rho_p, double rho_pp);

/// Parameter conversion between the sl(2)-native constant and the global
/// family rho' = sqrt(lambda^2 eta + c)/(2 eta) with lambda^2 = 4.
inline double global_c_from_sl2(double c_sl2) { return 4.0 * c_sl2; }
inline double sl2_c_from_global(double c) { return c / 4.0; }

/// The SU(2)-invariant frame {d/d-eta, xi_s1, xi_s2, xi_s3} at X = tE and the
/// metric evaluated on it.  Diagonal must be (1/(4 eta^2 rho'), eta rho',
/// eta rho', 1/rho').
struct EHFrame {
  double t = 0.0;
  double c_sl2 = 0.0;
  double eta = 0.0;
  Eigen::Matrix4d gram;
  Eigen::Vector4d diagonal;      // closed-form reference diagonal
  double max_offdiag = 0.0;
  double max_diag_rel_err = 0.0;
};

EHFrame eh_metric_components(double t, double c_sl2);

/// Max relative mismatch of the frame metric, pushed to the r-coordinate via
/// eta = (r/2)^4 - c, against W^{-1} dr^2 + (r^2/4)(s1^2 + s2^2 + W s3^2),
/// W = 1 - 16c/r^4.  Requires r above the bolt radius (16c)^{1/4}.
double eh_standard_form_check(double r, double c_sl2);

}  // namespace orbithk
