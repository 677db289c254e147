#pragma once

#include "orbithk/chevalley.hpp"

namespace orbithk {

/// Point X on a nilpotent orbit.  scale > 0 is set when X = t*e_theta.
struct OrbitPoint {
  Element element;
  double scale = 0.0;
};

/// X = t*e_theta on the minimal orbit; t > 0.
OrbitPoint minimal_orbit_point(const LieAlgebra& L, double t);

/// xi_A = [A, X].
Element vector_field(const LieAlgebra& L, const OrbitPoint& X, const Element& A);

/// im(ad_X) with a complex basis orthonormal under <., sigma .>.
struct TangentSpace {
  std::vector<Element> complex_basis;
  int real_dim = 0;
  double sv_gap = 0.0;  // ratio of smallest kept to largest dropped singular value
};

TangentSpace tangent_space(const LieAlgebra& L, const OrbitPoint& X);

/// real_dim(T_X O) - dim_R(ad_g X) for the compact form g; 1 on O_min.
int cohomogeneity(const LieAlgebra& L, const OrbitPoint& X);

/// KKS form: <X, [A,B]>.
std::complex<double> omega_c(const LieAlgebra& L, const OrbitPoint& X,
                             const Element& A, const Element& B);

struct Sl2Spectrum {
  std::vector<int> weights;              // highest weights k, descending
  std::vector<double> ad_e_ad_f_image;   // spectrum of ad_E ad_F on im(ad_E)
  bool minimal = false;
};

/// Decomposition data of the algebra under an sl(2)-triple (E,H,F).
/// Rejects triples violating the bracket relations.
Sl2Spectrum sl2_spectrum(const LieAlgebra& L, const Element& E, const Element& H,
                         const Element& F);

/// Cholesky factor R with herm(v,w) = (Rv) . conj(Rw); shared helper for
/// rank computations in the Hermitian geometry.
Eigen::MatrixXd herm_cholesky(const LieAlgebra& L);

}  // namespace orbithk
