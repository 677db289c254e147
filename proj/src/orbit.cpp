#include "orbithk/orbit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orbithk {

namespace {

constexpr double kRankRelTol = 1e-8;

int numeric_rank(const Eigen::VectorXd& sv, double* gap = nullptr) {
  if (sv.size() == 0) return 0;
  const double thr = kRankRelTol * sv[0];
  int r = 0;
  while (r < sv.size() && sv[r] > thr) ++r;
  if (gap) {
    *gap = (r > 0 && r < sv.size() && sv[r] > 0.0)
               ? sv[r - 1] / sv[r]
               : std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace

Eigen::MatrixXd herm_cholesky(const LieAlgebra& L) {
  // herm(v, w) = v^T M conj(w) with M(i,j) = kappa(i, sigma_perm(j)); SPD.
  Eigen::MatrixXd M(L.dim, L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) M(i, j) = L.killing()(i, L.sigma_perm_[j]);
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("hermitian form not positive definite");
  return llt.matrixU();
}

OrbitPoint minimal_orbit_point(const LieAlgebra& L, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("minimal_orbit_point: t must be > 0");
  OrbitPoint X;
  X.element = L.zero();
  X.element[L.e_index(L.theta)] = t;
  X.scale = t;
  return X;
}

Element vector_field(const LieAlgebra& L, const OrbitPoint& X, const Element& A) {
  return L.bracket(A, X.element);
}

TangentSpace tangent_space(const LieAlgebra& L, const OrbitPoint& X) {
  if (X.element.norm() == 0.0)
    throw std::invalid_argument("tangent_space: X must be nonzero");
  Eigen::MatrixXd R = herm_cholesky(L);
  Eigen::MatrixXcd C = R * L.ad(X.element);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C, Eigen::ComputeThinU);
  double gap = 0.0;
  int r = numeric_rank(svd.singularValues(), &gap);
  if (r > 0 && gap < 1e2) {
    std::ostringstream os;
    os << "tangent_space: ill-conditioned rank determination, singular-value gap "
       << gap;
    throw std::runtime_error(os.str());
  }
  Eigen::MatrixXd Rinv = R.inverse();
  TangentSpace T;
  T.sv_gap = gap;
  T.real_dim = 2 * r;
  T.complex_basis.reserve(r);
  for (int i = 0; i < r; ++i)
    T.complex_basis.push_back(Rinv * svd.matrixU().col(i));
  return T;
}

int cohomogeneity(const LieAlgebra& L, const OrbitPoint& X) {
  TangentSpace T = tangent_space(L, X);
  // real basis of the compact form: i*h_j, e_k - f_k, i*(e_k + f_k)
  const std::complex<double> I(0.0, 1.0);
  std::vector<Element> gens;
  for (int j = 0; j < L.rank; ++j) {
    Element v = L.zero();
    v[L.h_index(j)] = I;
    gens.push_back(v);
  }
  for (int k = 0; k < L.npos; ++k) {
    Element v = L.zero();
    v[L.e_index(k)] = 1.0;
    v[L.f_index(k)] = -1.0;
    gens.push_back(v);
    Element w = L.zero();
    w[L.e_index(k)] = I;
    w[L.f_index(k)] = I;
    gens.push_back(w);
  }
  Eigen::MatrixXd M(2 * L.dim, static_cast<int>(gens.size()));
  for (std::size_t m = 0; m < gens.size(); ++m) {
    Element w = L.bracket(gens[m], X.element);
    M.col(static_cast<int>(m)) << w.real(), w.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  int real_orbit_dim = numeric_rank(svd.singularValues());
  return T.real_dim - real_orbit_dim;
}

std::complex<double> omega_c(const LieAlgebra& L, const OrbitPoint& X,
                             const Element& A, const Element& B) {
  return L.pairing(X.element, L.bracket(A, B));
}

Sl2Spectrum sl2_spectrum(const LieAlgebra& L, const Element& E, const Element& H,
                         const Element& F) {
  auto enorm = [&](const Element& v) { return std::sqrt(L.eta(v)); };
  const double scale = std::max({enorm(E), enorm(H), enorm(F), 1.0});
  const double r1 = enorm(L.bracket(H, E) - 2.0 * E) / scale;
  const double r2 = enorm(L.bracket(H, F) + 2.0 * F) / scale;
  const double r3 = enorm(L.bracket(E, F) - H) / scale;
  if (r1 > 1e-8 || r2 > 1e-8 || r3 > 1e-8) {
    std::ostringstream os;
    os << "sl2_spectrum: triple relations violated, residuals [H,E]-2E: " << r1
       << ", [H,F]+2F: " << r2 << ", [E,F]-H: " << r3;
    throw std::invalid_argument(os.str());
  }

  Eigen::MatrixXcd adE = L.ad(E);
  Eigen::MatrixXcd adH = L.ad(H);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(adE, Eigen::ComputeFullU | Eigen::ComputeFullV);
  int r = numeric_rank(svd.singularValues());

  Sl2Spectrum out;
  // highest weights: ad_H eigenvalues on ker(ad_E), one summand each
  {
    Eigen::MatrixXcd Q = svd.matrixV().rightCols(L.dim - r);
    Eigen::MatrixXcd T = Q.adjoint() * adH * Q;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      out.weights.push_back(
          static_cast<int>(std::lround(es.eigenvalues()[i].real())));
    std::sort(out.weights.rbegin(), out.weights.rend());
  }
  // spectrum of ad_E ad_F on im(ad_E)
  {
    Eigen::MatrixXcd U = svd.matrixU().leftCols(r);
    Eigen::MatrixXcd T = U.adjoint() * (adE * L.ad(F)) * U;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      out.ad_e_ad_f_image.push_back(es.eigenvalues()[i].real());
    std::sort(out.ad_e_ad_f_image.begin(), out.ad_e_ad_f_image.end());
  }
  // minimal iff, apart from the triple's own S^2, all k lie in {0, 1}
  bool seen_two = false;
  bool ok = true;
  for (int k : out.weights) {
    if (k == 2 && !seen_two) {
      seen_two = true;
    } else if (k != 0 && k != 1) {
      ok = false;
    }
  }
  out.minimal = seen_two && ok;
  return out;
}

}  // namespace orbithk
