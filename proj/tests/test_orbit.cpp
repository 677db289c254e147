#include "orbithk/orbit.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace orbithk;

TEST_CASE("minimal orbit point and tangent dimensions") {
  // dim_C of the minimal orbit is 2h^vee - 2 = lambda^2 - 2
  for (auto [s, r] : {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 3},
                      {'D', 4}, {'G', 2}, {'F', 4}}) {
    CAPTURE(s);
    CAPTURE(r);
    LieAlgebra L = build_algebra(build_root_system(s, r));
    OrbitPoint X = minimal_orbit_point(L, 1.5);
    TangentSpace T = tangent_space(L, X);
    CHECK(static_cast<long long>(T.complex_basis.size()) == L.lambda_sq() - 2);
    CHECK(T.real_dim == 2 * static_cast<int>(T.complex_basis.size()));
    CHECK(cohomogeneity(L, X) == 1);
  }
  LieAlgebra L1 = build_algebra(build_root_system('A', 1));
  CHECK_THROWS_AS(minimal_orbit_point(L1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(minimal_orbit_point(L1, -1.0), std::invalid_argument);
}

TEST_CASE("sl(2): real dimension four, compact orbits of dimension three") {
  LieAlgebra L = build_algebra(build_root_system('A', 1));
  OrbitPoint X = minimal_orbit_point(L, 1.0);
  TangentSpace T = tangent_space(L, X);
  CHECK(T.real_dim == 4);
  CHECK(cohomogeneity(L, X) == 1);  // so the compact orbit has dimension 3
}

TEST_CASE("KKS form is antisymmetric and nondegenerate on the frame") {
  LieAlgebra L = build_algebra(build_root_system('A', 2));
  OrbitPoint X = minimal_orbit_point(L, 1.0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Element A = random_element(L, rng);
    Element B = random_element(L, rng);
    auto wab = omega_c(L, X, A, B);
    auto wba = omega_c(L, X, B, A);
    CHECK(std::abs(wab + wba) < 1e-10 * (1.0 + std::abs(wab)));
  }
}

TEST_CASE("theta-triple spectrum: A2") {
  LieAlgebra L = build_algebra(build_root_system('A', 2));
  Element E = L.basis_element(L.e_index(L.theta));
  Element F = L.basis_element(L.f_index(L.theta));
  Element H = L.bracket(E, F);
  Sl2Spectrum sp = sl2_spectrum(L, E, H, F);
  CHECK(sp.weights == std::vector<int>{2, 1, 1, 0});
  CHECK(sp.minimal);
}

TEST_CASE("principal triple of A2 is not minimal") {
  LieAlgebra L = build_algebra(build_root_system('A', 2));
  Element E = L.basis_element(L.e_index(0)) + L.basis_element(L.e_index(1));
  Element H = 2.0 * L.basis_element(L.h_index(0)) + 2.0 * L.basis_element(L.h_index(1));
  Element F = 2.0 * (L.basis_element(L.f_index(0)) + L.basis_element(L.f_index(1)));
  Sl2Spectrum sp = sl2_spectrum(L, E, H, F);
  CHECK(sp.weights == std::vector<int>{4, 2});
  CHECK_FALSE(sp.minimal);
  // ad_E ad_F on the image: {2,2} from S^2 and {4,6,6,4} from S^4
  std::vector<double> want = {2, 2, 4, 4, 6, 6};
  REQUIRE(sp.ad_e_ad_f_image.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(sp.ad_e_ad_f_image[i] == doctest::Approx(want[i]).epsilon(1e-8));
}

TEST_CASE("theta-triples are minimal in every type") {
  for (auto [s, r] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4},
                      {'G', 2}, {'F', 4}}) {
    CAPTURE(s);
    CAPTURE(r);
    LieAlgebra L = build_algebra(build_root_system(s, r));
    Element E = L.basis_element(L.e_index(L.theta));
    Element F = L.basis_element(L.f_index(L.theta));
    Element H = L.bracket(E, F);
    Sl2Spectrum sp = sl2_spectrum(L, E, H, F);
    CHECK(sp.minimal);
    CHECK(std::count(sp.weights.begin(), sp.weights.end(), 2) == 1);
    for (int k : sp.weights) CHECK(k <= 2);
  }
}

TEST_CASE("broken triples are rejected with residuals") {
  LieAlgebra L = build_algebra(build_root_system('A', 2));
  Element E = L.basis_element(L.e_index(L.theta));
  Element F = L.basis_element(L.f_index(L.theta));
  Element H = L.bracket(E, F);
  CHECK_THROWS_AS(sl2_spectrum(L, E, Element(1.5 * H), F), std::invalid_argument);
  CHECK_THROWS_AS(sl2_spectrum(L, E, H, Element(-F)), std::invalid_argument);
}
