#include "orbithk/hyperkahler.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbithk {

namespace {

using cd = std::complex<double>;

void require_on_orbit(double eta_val) {
  if (!(eta_val > 0.0))
    throw std::invalid_argument("eta(X) must be positive (X = 0 is not on the orbit)");
}

// Exact directional derivative of Y -> 2 Im <[C,Y], sigma Y> at X along v,
// from the polynomial expansion in the curve parameter.
double dphi(const LieAlgebra& L, const Element& C, const Element& X,
            const Element& v) {
  return 2.0 * (L.pairing(L.bracket(C, v), L.sigma(X)) +
                L.pairing(L.bracket(C, X), L.sigma(v)))
                   .imag();
}

// Exact derivative of eta along v: d/ds eta(X + s v) at s = 0.
double deta(const LieAlgebra& L, const Element& X, const Element& v) {
  return (L.pairing(v, L.sigma(X)) + L.pairing(X, L.sigma(v))).real();
}

}  // namespace

double PotentialFamily::rho_p(double eta) const {
  return std::sqrt(lambda_sq * eta + c) / (2.0 * eta);
}

double PotentialFamily::rho_pp(double eta) const {
  const double u = lambda_sq * eta + c;
  return (lambda_sq * eta - 2.0 * u) / (4.0 * eta * eta * std::sqrt(u));
}

long long lambda_squared(const LieAlgebra& L) { return L.lambda_sq(); }

double metric_tangent(const LieAlgebra& L, const OrbitPoint& X, double rho_p,
                      double rho_pp, const Element& v, const Element& w) {
  cd t1 = L.pairing(v, L.sigma(w));
  cd t2 = L.pairing(v, L.sigma(X.element)) * L.pairing(L.sigma(w), X.element);
  return 2.0 * (rho_p * t1 + rho_pp * t2).real();
}

double kahler_form_I_tangent(const LieAlgebra& L, const OrbitPoint& X,
                             double rho_p, double rho_pp, const Element& v,
                             const Element& w) {
  cd t1 = L.pairing(v, L.sigma(w));
  cd t2 = L.pairing(v, L.sigma(X.element)) * L.pairing(L.sigma(w), X.element);
  return 2.0 * (rho_p * t1 + rho_pp * t2).imag();
}

double kahler_form_I(const LieAlgebra& L, const OrbitPoint& X,
                     const PotentialFamily& pf, const Element& A, const Element& B) {
  const double ev = L.eta(X.element);
  require_on_orbit(ev);
  return kahler_form_I_tangent(L, X, pf.rho_p(ev), pf.rho_pp(ev),
                               vector_field(L, X, A), vector_field(L, X, B));
}

double metric(const LieAlgebra& L, const OrbitPoint& X, const PotentialFamily& pf,
              const Element& A, const Element& B) {
  const double ev = L.eta(X.element);
  require_on_orbit(ev);
  return metric_tangent(L, X, pf.rho_p(ev), pf.rho_pp(ev), vector_field(L, X, A),
                        vector_field(L, X, B));
}

bool positivity_condition_general(double rho_p, double rho_pp, double eta_val) {
  return rho_p > std::max(0.0, -eta_val * rho_pp);
}

bool positivity_condition(const PotentialFamily& pf, double eta_val) {
  require_on_orbit(eta_val);
  return positivity_condition_general(pf.rho_p(eta_val), pf.rho_pp(eta_val),
                                      eta_val);
}

Element apply_J_tangent(const LieAlgebra& L, const OrbitPoint& X,
                        const PotentialFamily& pf, const Element& xi) {
  const double ev = L.eta(X.element);
  require_on_orbit(ev);
  const double rp = pf.rho_p(ev), rpp = pf.rho_pp(ev);
  Element sxi = L.sigma(xi);
  return -2.0 * rp * L.bracket(X.element, sxi) -
         2.0 * rpp * L.pairing(sxi, X.element) *
             L.bracket(X.element, L.sigma(X.element));
}

Element apply_J(const LieAlgebra& L, const OrbitPoint& X, const PotentialFamily& pf,
                const Element& A) {
  return apply_J_tangent(L, X, pf, vector_field(L, X, A));
}

VerifyReport verify_quaternionic(const LieAlgebra& L, const OrbitPoint& X,
                                 const PotentialFamily& pf, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const double ev = L.eta(X.element);
  require_on_orbit(ev);
  const double rp = pf.rho_p(ev), rpp = pf.rho_pp(ev);

  VerifyReport rep;
  TangentSpace T = tangent_space(L, X);
  const int m = static_cast<int>(T.complex_basis.size());
  const cd iu(0.0, 1.0);

  auto coords = [&](const Element& v) {
    Eigen::VectorXcd c(m);
    for (int j = 0; j < m; ++j) c[j] = L.herm(v, T.complex_basis[j]);
    return c;
  };
  auto from_coords = [&](const Eigen::VectorXcd& c) {
    Element v = L.zero();
    for (int j = 0; j < m; ++j) v += c[j] * T.complex_basis[j];
    return v;
  };
  auto real_coords = [&](const Element& v) {
    Eigen::VectorXcd c = coords(v);
    Eigen::VectorXd r(2 * m);
    r << c.real(), c.imag();
    return r;
  };
  auto real_basis = [&](int p) {
    return p < m ? T.complex_basis[p] : Element(iu * T.complex_basis[p - m]);
  };

  // (a) tangency of J on the frame
  double tangency = 0.0;
  for (int p = 0; p < 2 * m; ++p) {
    Element jv = apply_J_tangent(L, X, pf, real_basis(p));
    Element res = jv - from_coords(coords(jv));
    tangency = std::max(tangency, std::sqrt(L.eta(res) / std::max(L.eta(jv), 1.0)));
  }
  rep.checks.push_back({"J_tangency", tangency, 1e-8, tangency < 1e-8, ""});

  // real operator matrices on {b_j, i b_j}
  Eigen::MatrixXd matJ(2 * m, 2 * m), matI(2 * m, 2 * m);
  for (int p = 0; p < 2 * m; ++p) {
    matJ.col(p) = real_coords(apply_J_tangent(L, X, pf, real_basis(p)));
    matI.col(p) = real_coords(iu * real_basis(p));
  }
  Eigen::MatrixXd matK = matI * matJ;  // K := IJ, by definition

  auto opnorm = [](const Eigen::MatrixXd& M) {
    return M.jacobiSvd().singularValues()[0];
  };

  const double j2 = opnorm(matJ * matJ + Eigen::MatrixXd::Identity(2 * m, 2 * m));
  rep.checks.push_back({"J_squared_plus_id", j2, 1e-8, j2 < 1e-8, ""});
  const double jik = opnorm(matJ * matI + matK);
  rep.checks.push_back({"JI_plus_K", jik, 1e-8, jik < 1e-8, ""});
  rep.checks.push_back({"IJ_minus_K", 0.0, 1e-8, true, "K defined as IJ"});

  // Gram matrix of g on the real frame
  Eigen::MatrixXd G(2 * m, 2 * m);
  for (int p = 0; p < 2 * m; ++p)
    for (int q = p; q < 2 * m; ++q)
      G(p, q) = G(q, p) =
          metric_tangent(L, X, rp, rpp, real_basis(p), real_basis(q));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const double min_eig = es.eigenvalues().minCoeff();
  rep.checks.push_back({"gram_min_eigenvalue", min_eig > 0.0 ? 0.0 : -min_eig, 0.5,
                        min_eig > 0.0,
                        "min Gram eigenvalue = " + std::to_string(min_eig)});

  // trial-based scalar identities
  std::mt19937_64 rng(seed);
  double res_ginv = 0.0, res_wc = 0.0;
  for (int t = 0; t < trials; ++t) {
    Element A = random_element(L, rng);
    Element B = random_element(L, rng);
    Element xa = vector_field(L, X, A);
    Element xb = vector_field(L, X, B);
    Element jxa = apply_J_tangent(L, X, pf, xa);
    Element jxb = apply_J_tangent(L, X, pf, xb);
    const double g0 = metric_tangent(L, X, rp, rpp, xa, xb);
    const double gj = metric_tangent(L, X, rp, rpp, jxa, jxb);
    res_ginv = std::max(res_ginv, std::abs(gj - g0) / std::max(1.0, std::abs(g0)));
    const double wj = metric_tangent(L, X, rp, rpp, xa, jxb);
    const double wk = metric_tangent(L, X, rp, rpp, xa, Element(iu * jxb));
    const cd wc = omega_c(L, X, A, B);
    res_wc = std::max(res_wc,
                      std::abs(cd(wj, wk) - wc) / std::max(1.0, std::abs(wc)));
  }
  rep.checks.push_back({"g_J_invariance", res_ginv, 1e-8, res_ginv < 1e-8, ""});
  rep.checks.push_back(
      {"omega_J_plus_i_omega_K_equals_omega_c", res_wc, 1e-9, res_wc < 1e-9, ""});
  return rep;
}

double uniqueness_deviation(const LieAlgebra& L, const OrbitPoint& X, double c) {
  if (L.rs.series == 'A' && L.rs.rank == 1)
    throw std::invalid_argument(
        "uniqueness_deviation: undefined for sl(2), the complement is empty "
        "(the Eguchi-Hanson family survives there)");
  if (c < 0.0) throw std::invalid_argument("c must be >= 0");
  PotentialFamily pf{static_cast<double>(L.lambda_sq()), c};
  const RootVec theta = L.rs.positive_roots[L.theta];
  double dev = 0.0;
  for (int k = 0; k < L.npos; ++k) {
    RootVec beta = theta - L.rs.positive_roots[k];
    if (beta.isZero() || L.rs.positive_index(beta) < 0) continue;
    Element xi = L.basis_element(L.e_index(L.rs.positive_index(beta)));
    Element w = apply_J_tangent(L, X, pf, apply_J_tangent(L, X, pf, xi)) + xi;
    dev = std::max(dev, std::sqrt(L.eta(w) / L.eta(xi)));
  }
  return dev;
}

VerifyReport derivative_identities(const LieAlgebra& L, const OrbitPoint& X,
                                   const Element& A, const Element& B) {
  VerifyReport rep;
  const Element& Xv = X.element;
  Element xa = L.bracket(A, Xv);
  Element xb = L.bracket(B, Xv);

  // (i) d-eta
  const double lhs1 = deta(L, Xv, xa);
  const double rhs1 = 2.0 * L.pairing(xa, L.sigma(Xv)).real();
  const double r1 = std::abs(lhs1 - rhs1) / std::max(1.0, std::abs(rhs1));
  rep.checks.push_back({"d_eta", r1, 1e-9, r1 < 1e-9, ""});

  // (ii) dId-eta via the invariant-vector-field formula
  const double lhs2 = dphi(L, B, Xv, xa) - dphi(L, A, Xv, xb) -
                      2.0 * L.pairing(L.bracket(Element(-L.bracket(A, B)), Xv),
                                      L.sigma(Xv))
                                .imag();
  const double rhs2 = -4.0 * L.pairing(xa, L.sigma(xb)).imag();
  const double r2 = std::abs(lhs2 - rhs2) / std::max(1.0, std::abs(rhs2));
  rep.checks.push_back({"dId_eta", r2, 1e-9, r2 < 1e-9, ""});

  // (iii) d-eta ^ Id-eta
  const double Ideta_a = 2.0 * L.pairing(xa, L.sigma(Xv)).imag();
  const double Ideta_b = 2.0 * L.pairing(xb, L.sigma(Xv)).imag();
  const double lhs3 = deta(L, Xv, xa) * Ideta_b - deta(L, Xv, xb) * Ideta_a;
  const double rhs3 =
      -4.0 *
      (L.pairing(xa, L.sigma(Xv)) * L.pairing(L.sigma(xb), Xv)).imag();
  const double r3 = std::abs(lhs3 - rhs3) / std::max(1.0, std::abs(rhs3));
  rep.checks.push_back({"d_eta_wedge_Id_eta", r3, 1e-9, r3 < 1e-9, ""});
  return rep;
}

double omega_I_assembled(const LieAlgebra& L, const OrbitPoint& X,
                         const PotentialFamily& pf, const Element& A,
                         const Element& B) {
  const double ev = L.eta(X.element);
  require_on_orbit(ev);
  const Element& Xv = X.element;
  Element xa = L.bracket(A, Xv);
  Element xb = L.bracket(B, Xv);
  const double dId = dphi(L, B, Xv, xa) - dphi(L, A, Xv, xb) -
                     2.0 * L.pairing(L.bracket(Element(-L.bracket(A, B)), Xv),
                                     L.sigma(Xv))
                               .imag();
  const double Ideta_a = 2.0 * L.pairing(xa, L.sigma(Xv)).imag();
  const double Ideta_b = 2.0 * L.pairing(xb, L.sigma(Xv)).imag();
  const double wedge = deta(L, Xv, xa) * Ideta_b - deta(L, Xv, xb) * Ideta_a;
  return -0.5 * pf.rho_p(ev) * dId - 0.5 * pf.rho_pp(ev) * wedge;
}

}  // namespace orbithk
