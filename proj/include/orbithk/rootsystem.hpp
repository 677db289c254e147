#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbithk {

/// Root in simple-root coordinates (integer vector of length rank).
using RootVec = Eigen::VectorXi;

/// Root system of a simple complex Lie algebra, generated from its Cartan
/// matrix.  Roots are stored exactly, ordered by height then lexicographic,
/// so downstream structure-constant caches are reproducible.
class RootSystem {
public:
  char series = '?';            // one of A B C D E F G
  int rank = 0;
  Eigen::MatrixXi cartan;       // cartan(i,j) = <alpha_i, alpha_j^vee>
  std::vector<RootVec> positive_roots;
  int highest_root_index = -1;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  int dimension() const { return rank + 2 * num_positive(); }
  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  /// True for any root, positive or negative.
  bool is_root(const RootVec& v) const;
  /// Index into positive_roots, or -1.
  int positive_index(const RootVec& v) const;
  int height(const RootVec& v) const { return v.sum(); }

  /// <beta, alpha_i^vee>, exact.
  int coroot_pairing(const RootVec& beta, int i) const;
  /// 6*(beta,beta) in the normalization where long roots have norm 2.
  long long norm6(const RootVec& beta) const;
  /// 6*d_i with (alpha_i,alpha_i) = 2*d_i.
  long long simple_weight6(int i) const { return w6_[i]; }

  void finalize();              // builds the lookup index; set by the builder

private:
  std::map<std::vector<int>, int> index_;
  std::vector<long long> w6_;
  friend RootSystem build_root_system(char series, int rank);
};

/// Generates the root system for a valid simple type.  Throws
/// std::invalid_argument naming the valid ranges otherwise.
RootSystem build_root_system(char series, int rank);

/// The unique positive root theta with theta + beta never a root.
int highest_root(const RootSystem& rs);

/// (p, q) with b - p*a, ..., b + q*a the a-string through b.
/// Requires a != +-b.
std::pair<int, int> root_string(const RootSystem& rs, const RootVec& a,
                                const RootVec& b);

}  // namespace orbithk
