#pragma once

#include "orbithk/rootsystem.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace orbithk {

/// Coefficient vector over the Chevalley basis {h_i, e_beta, f_beta}.
using Element = Eigen::VectorXcd;

using SparseBracket = std::vector<std::pair<int, long long>>;

struct CheckRecord {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Simple complex Lie algebra in a Chevalley basis.  Structure constants and
/// the Killing matrix are exact integers; signs follow the extraspecial-pair
/// convention.  Immutable after construction.
class LieAlgebra {
public:
  static constexpr const char* kConventionVersion = "escp-1";

  RootSystem rs;
  int rank = 0;
  int npos = 0;
  int dim = 0;
  int theta = -1;  // highest-root index in rs.positive_roots

  // Basis layout: h_0..h_{rank-1}, e_0..e_{npos-1}, f_0..f_{npos-1}.
  int h_index(int i) const { return i; }
  int e_index(int k) const { return rank + k; }
  int f_index(int k) const { return rank + npos + k; }
  std::string basis_name(int idx) const;

  /// [x_i, x_j] as a sparse integer combination of basis elements.
  SparseBracket bracket_basis(int i, int j) const;

  Element zero() const { return Element::Zero(dim); }
  Element basis_element(int idx) const;

  Element bracket(const Element& x, const Element& y) const;
  /// Antilinear involution fixing the compact form: sigma(e) = -f,
  /// sigma(h) = -h, plus complex conjugation of coefficients.
  Element sigma(const Element& x) const;
  /// <x,y> = -kappa(x,y), bilinear.
  std::complex<double> pairing(const Element& x, const Element& y) const;
  /// eta(x) = <x, sigma x> >= 0.
  double eta(const Element& x) const;
  /// Hermitian inner product <v, sigma w>; positive definite.
  std::complex<double> herm(const Element& v, const Element& w) const;

  long long killing_exact(int i, int j) const { return killing_(i, j); }
  const Eigen::MatrixXd& killing() const { return killing_d_; }
  /// lambda^2 = kappa(e_theta, f_theta) = eta(e_theta).
  long long lambda_sq() const;

  Eigen::MatrixXcd ad(const Element& x) const;

  // construction internals, used by build_algebra and the cache loader
  std::vector<SparseBracket> table_;  // (i,j) -> i*dim+j, filled for i<j
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> killing_;
  Eigen::MatrixXd killing_d_;
  std::vector<int> sigma_perm_;

  void finalize_derived();  // killing matrix, sigma permutation
};

/// Builds the algebra from scratch (exact arithmetic throughout).
LieAlgebra build_algebra(const RootSystem& rs);

/// Builds with a plain-text structure-constant cache under cache_dir.
/// A corrupt or mismatched cache is rebuilt; a note is appended to warnings.
LieAlgebra build_algebra_cached(const RootSystem& rs, const std::string& cache_dir,
                                std::vector<std::string>* warnings = nullptr);

bool save_structure_cache(const LieAlgebra& L, const std::string& path);
std::string cache_file_name(const RootSystem& rs);

/// Exact invariant suite: Jacobi, Killing ad-invariance, sigma properties,
/// eta positivity, and the |N| = p+1 root-string rule.
VerifyReport verify_algebra(const LieAlgebra& L, int random_trials = 1000,
                            std::uint64_t seed = 42);

/// Independent Killing-form oracle from the Chevalley block rules
/// (root-space grading plus the Cartan sum rule).
long long killing_block_rule(const LieAlgebra& L, int i, int j);

Element random_element(const LieAlgebra& L, std::mt19937_64& rng);

}  // namespace orbithk
