#include "orbithk/sl2geom.hpp"

#include "orbithk/hyperkahler.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace orbithk {

SkRep sk_matrices(int k) {
  if (k < 0) throw std::invalid_argument("sk_matrices: k must be >= 0");
  SkRep rep;
  rep.k = k;
  rep.phi_E = MatrixXll::Zero(k + 1, k + 1);
  rep.phi_H = MatrixXll::Zero(k + 1, k + 1);
  rep.phi_F = MatrixXll::Zero(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) rep.phi_H(i, i) = k - 2 * i;
  for (int i = 0; i < k; ++i) {
    rep.phi_E(i, i + 1) = i + 1;
    rep.phi_F(i + 1, i) = k - i;
  }
  return rep;
}

double ode_residual_general(double eta_val, double rho_p, double rho_pp) {
  if (!(eta_val > 0.0)) throw std::invalid_argument("eta must be positive");
  return 2.0 * (eta_val * rho_p * rho_p + eta_val * eta_val * rho_p * rho_pp) - 1.0;
}

double ode_residual(double eta_val, double c_sl2) {
  if (!(eta_val > 0.0)) throw std::invalid_argument("eta must be positive");
  const double rho_p = std::sqrt(eta_val + c_sl2) / eta_val;
  const double rho_pp =
      -(eta_val + 2.0 * c_sl2) /
      (2.0 * eta_val * eta_val * std::sqrt(eta_val + c_sl2));
  return ode_residual_general(eta_val, rho_p, rho_pp);
}

namespace {

const LieAlgebra& sl2_algebra() {
  static const LieAlgebra L = build_algebra(build_root_system('A', 1));
  return L;
}

}  // namespace

EHFrame eh_metric_components(double t, double c_sl2) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  const LieAlgebra& L = sl2_algebra();
  OrbitPoint X = minimal_orbit_point(L, t);
  const double eta_val = L.eta(X.element);  // 4 t^2
  PotentialFamily pf{4.0, global_c_from_sl2(c_sl2)};
  const double rp = pf.rho_p(eta_val), rpp = pf.rho_pp(eta_val);

  const std::complex<double> iu(0.0, 1.0);
  Element e = L.basis_element(L.e_index(0));
  Element f = L.basis_element(L.f_index(0));
  Element h = L.basis_element(L.h_index(0));

  // s1 = (e - f)/2, s2 = i(e + f)/2, s3 = i h/2; frame = {E/(8t), xi_s1, xi_s2, xi_s3}
  std::array<Element, 4> frame = {
      Element(e / (8.0 * t)),
      L.bracket(Element((e - f) / 2.0), X.element),
      L.bracket(Element(iu * (e + f) / 2.0), X.element),
      L.bracket(Element(iu * h / 2.0), X.element),
  };

  EHFrame out;
  out.t = t;
  out.c_sl2 = c_sl2;
  out.eta = eta_val;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out.gram(a, b) = metric_tangent(L, X, rp, rpp, frame[a], frame[b]);

  const double rp_sl2 = std::sqrt(eta_val + c_sl2) / eta_val;  // equals rp
  out.diagonal << 1.0 / (4.0 * eta_val * eta_val * rp_sl2), eta_val * rp_sl2,
      eta_val * rp_sl2, 1.0 / rp_sl2;
  out.max_offdiag = 0.0;
  out.max_diag_rel_err = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a != b) out.max_offdiag = std::max(out.max_offdiag, std::abs(out.gram(a, b)));
    }
    out.max_diag_rel_err =
        std::max(out.max_diag_rel_err,
                 std::abs(out.gram(a, a) - out.diagonal[a]) / out.diagonal[a]);
  }
  return out;
}

double eh_standard_form_check(double r, double c_sl2) {
  const double eta_val = std::pow(r / 2.0, 4) - c_sl2;
  if (!(eta_val > 0.0))
    throw std::invalid_argument(
        "eh_standard_form_check: r inside the Eguchi-Hanson bolt");
  const double t = std::sqrt(eta_val) / 2.0;
  EHFrame fr = eh_metric_components(t, c_sl2);

  const double jac = r * r * r / 4.0;  // d-eta = (r^3/4) dr
  const double W = 1.0 - 16.0 * c_sl2 / (r * r * r * r);
  const double ref[4] = {1.0 / W, r * r / 4.0, r * r / 4.0, r * r * W / 4.0};
  const double got[4] = {fr.gram(0, 0) * jac * jac, fr.gram(1, 1), fr.gram(2, 2),
                         fr.gram(3, 3)};
  double mismatch = 0.0;
  for (int i = 0; i < 4; ++i)
    mismatch = std::max(mismatch, std::abs(got[i] - ref[i]) / std::abs(ref[i]));
  return mismatch;
}

}  // namespace orbithk
