#include "orbithk/sl2geom.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

using namespace orbithk;

TEST_CASE("S^k matrices satisfy the bracket relations exactly") {
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    SkRep rep = sk_matrices(k);
    MatrixXll he = rep.phi_H * rep.phi_E - rep.phi_E * rep.phi_H;
    MatrixXll hf = rep.phi_H * rep.phi_F - rep.phi_F * rep.phi_H;
    MatrixXll ef = rep.phi_E * rep.phi_F - rep.phi_F * rep.phi_E;
    CHECK((he - 2 * rep.phi_E).cwiseAbs().maxCoeff() == 0);
    CHECK((hf + 2 * rep.phi_F).cwiseAbs().maxCoeff() == 0);
    CHECK((ef - rep.phi_H).cwiseAbs().maxCoeff() == 0);
  }
  CHECK_THROWS_AS(sk_matrices(-1), std::invalid_argument);
}

TEST_CASE("phi_E is nilpotent of the right order") {
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    SkRep rep = sk_matrices(k);
    MatrixXll p = MatrixXll::Identity(k + 1, k + 1);
    for (int s = 0; s < k; ++s) p = p * rep.phi_E;
    // phi_E^k has exactly one nonzero entry: (0, k)
    long long nonzero = 0;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        if (p(i, j) != 0) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(p(0, k) != 0);
    CHECK((p * rep.phi_E).cwiseAbs().maxCoeff() == 0);  // phi_E^{k+1} = 0
  }
}

TEST_CASE("phi_E phi_F spectrum is {i(k+1-i)}") {
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    SkRep rep = sk_matrices(k);
    MatrixXll p = rep.phi_E * rep.phi_F;
    // the product is diagonal, so the spectrum is exact
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        if (i != j) CHECK(p(i, j) == 0);
    for (int i = 0; i < k; ++i)
      CHECK(p(i, i) == static_cast<long long>(i + 1) * (k - i));
    CHECK(p(k, k) == 0);
  }
}

TEST_CASE("ODE residual vanishes on the closed-form family") {
  for (double eta : {0.25, 1.0, 2.5, 10.0, 100.0})
    for (double c : {0.0, 0.5, 1.0, 4.0, 9.0}) {
      CAPTURE(eta);
      CAPTURE(c);
      CHECK(std::abs(ode_residual(eta, c)) < 1e-12);
    }
  // negative control: rho' = rho'' = 1 at eta = 1 gives 2(1 + 1) - 1 = 3;
  // rho'' = -1 gives -1
  CHECK(ode_residual_general(1.0, 1.0, -1.0) == doctest::Approx(-1.0));
  CHECK(std::abs(ode_residual_general(1.0, 1.0, -1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ode_residual(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("invariant frame diagonalizes the metric") {
  EHFrame fr0 = eh_metric_components(1.0, 0.0);
  CHECK(fr0.eta == doctest::Approx(4.0));
  CHECK(fr0.max_offdiag < 1e-12);
  CHECK(fr0.gram(0, 0) == doctest::Approx(1.0 / 32.0).epsilon(1e-12));
  CHECK(fr0.gram(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fr0.gram(2, 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fr0.gram(3, 3) == doctest::Approx(2.0).epsilon(1e-12));

  // t = 1, c = 1: eta = 4, rho' = sqrt(5)/4
  EHFrame fr1 = eh_metric_components(1.0, 1.0);
  const double s5 = std::sqrt(5.0);
  CHECK(fr1.gram(0, 0) == doctest::Approx(1.0 / (16.0 * s5)).epsilon(1e-12));
  CHECK(fr1.gram(1, 1) == doctest::Approx(s5).epsilon(1e-12));
  CHECK(fr1.gram(2, 2) == doctest::Approx(s5).epsilon(1e-12));
  CHECK(fr1.gram(3, 3) == doctest::Approx(4.0 / s5).epsilon(1e-12));
  CHECK(fr1.max_diag_rel_err < 1e-12);
}

TEST_CASE("standard Eguchi-Hanson form in the r coordinate") {
  for (double c : {0.0, 1.0, 3.0}) {
    const double r_min = std::pow(16.0 * c, 0.25) + 0.3;
    for (int i = 0; i < 40; ++i) {
      const double r = r_min + 0.25 * i;
      CAPTURE(c);
      CAPTURE(r);
      CHECK(eh_standard_form_check(r, c) < 1e-9);
    }
  }
  // inside the bolt the coordinate change is invalid
  CHECK_THROWS_AS(eh_standard_form_check(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("parameter conversion between the sl(2) and global families") {
  CHECK(global_c_from_sl2(1.0) == 4.0);
  CHECK(sl2_c_from_global(4.0) == 1.0);
  for (double c : {0.0, 0.7, 2.0})
    CHECK(sl2_c_from_global(global_c_from_sl2(c)) == doctest::Approx(c));
}
