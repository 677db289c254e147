#include "orbithk/hyperkahler.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace orbithk;

TEST_CASE("potential family derivatives") {
  PotentialFamily pf{6.0, 0.0};
  // c = 0: rho' = lambda / (2 sqrt(eta)), rho'' = -lambda / (4 eta^{3/2})
  for (double eta : {0.5, 1.0, 2.0, 9.0}) {
    CHECK(pf.rho_p(eta) ==
          doctest::Approx(std::sqrt(6.0) / (2.0 * std::sqrt(eta))).epsilon(1e-13));
    CHECK(pf.rho_pp(eta) ==
          doctest::Approx(-std::sqrt(6.0) / (4.0 * std::pow(eta, 1.5))).epsilon(1e-13));
    // finite-difference cross-check of rho'' against rho'
    const double h = 1e-6 * eta;
    const double fd = (pf.rho_p(eta + h) - pf.rho_p(eta - h)) / (2.0 * h);
    CHECK(pf.rho_pp(eta) == doctest::Approx(fd).epsilon(1e-6));
  }
  PotentialFamily pfc{6.0, 3.0};
  for (double eta : {0.5, 1.0, 4.0}) {
    const double h = 1e-6 * eta;
    const double fd = (pfc.rho_p(eta + h) - pfc.rho_p(eta - h)) / (2.0 * h);
    CHECK(pfc.rho_pp(eta) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("quaternionic identities hold at c = 0") {
  for (auto [s, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
    CAPTURE(s);
    CAPTURE(r);
    LieAlgebra L = build_algebra(build_root_system(s, r));
    OrbitPoint X = minimal_orbit_point(L, 1.0);
    PotentialFamily pf{static_cast<double>(L.lambda_sq()), 0.0};
    VerifyReport rep = verify_quaternionic(L, X, pf, 50, 42);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.max_residual);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("sl(2) keeps the full identity J^2 = -Id for every c") {
  LieAlgebra L = build_algebra(build_root_system('A', 1));
  OrbitPoint X = minimal_orbit_point(L, 1.0);
  for (double c : {0.0, 1.0, 4.0, 10.0}) {
    PotentialFamily pf{4.0, c};
    VerifyReport rep = verify_quaternionic(L, X, pf, 25, 42);
    for (const auto& chk : rep.checks) {
      CAPTURE(c);
      CAPTURE(chk.name);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("uniqueness deviation equals c / (lambda^2 eta)") {
  LieAlgebra L = build_algebra(build_root_system('A', 2));
  // eta = 1 at t = 1/sqrt(6); deviation must be exactly c / 6
  OrbitPoint X = minimal_orbit_point(L, std::sqrt(1.0 / 6.0));
  CHECK(uniqueness_deviation(L, X, 6.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(uniqueness_deviation(L, X, 3.0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(uniqueness_deviation(L, X, 0.0) == doctest::Approx(0.0).epsilon(1e-9));

  LieAlgebra L1 = build_algebra(build_root_system('A', 1));
  CHECK_THROWS_AS(
      uniqueness_deviation(L1, minimal_orbit_point(L1, 1.0), 1.0),
      std::invalid_argument);
}

TEST_CASE("positivity condition") {
  PotentialFamily pf{6.0, 2.0};
  for (double eta : {0.1, 1.0, 5.0}) CHECK(positivity_condition(pf, eta));
  // negative control: rho' = 1/eta^2 has rho'' = -2/eta^3, so
  // -eta rho'' = 2/eta^2 > rho' and the metric is indefinite
  CHECK_FALSE(positivity_condition_general(1.0, -2.0, 1.0));
}

TEST_CASE("indefinite candidate metric really has a negative direction") {
  LieAlgebra L = build_algebra(build_root_system('A', 1));
  OrbitPoint X = minimal_orbit_point(L, 1.0);
  const double eta = L.eta(X.element);  // 4
  const double rho_p = 1.0 / (eta * eta), rho_pp = -2.0 / (eta * eta * eta);
  // along xi = [e/(2t), X] the rho'' term dominates
  Element xi = vector_field(L, X, Element(0.5 * L.basis_element(L.e_index(0))));
  (void)xi;
  Element h = L.basis_element(L.h_index(0));
  Element xh = vector_field(L, X, h);
  CHECK(metric_tangent(L, X, rho_p, rho_pp, xh, xh) < 0.0);
}

TEST_CASE("derivative identities and the assembled omega_I") {
  for (auto [s, r] : {std::pair{'A', 2}, {'C', 3}}) {
    LieAlgebra L = build_algebra(build_root_system(s, r));
    OrbitPoint X = minimal_orbit_point(L, 0.8);
    PotentialFamily pf{static_cast<double>(L.lambda_sq()), 1.5};
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
      Element A = random_element(L, rng);
      Element B = random_element(L, rng);
      VerifyReport rep = derivative_identities(L, X, A, B);
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
      }
      const double w1 = omega_I_assembled(L, X, pf, A, B);
      const double w2 = kahler_form_I(L, X, pf, A, B);
      CHECK(w1 == doctest::Approx(w2).epsilon(1e-9));
    }
  }
}
