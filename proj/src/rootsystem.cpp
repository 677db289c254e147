#include "orbithk/rootsystem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbithk {

namespace {

std::vector<int> key_of(const RootVec& v) {
  return std::vector<int>(v.data(), v.data() + v.size());
}

bool lex_less(const RootVec& a, const RootVec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void check_type(char series, int rank) {
  auto fail = [&] {
    std::ostringstream os;
    os << "invalid simple type " << series << rank
       << "; valid: A(n>=1), B(n>=2), C(n>=3), D(n>=4), E(6..8), F4, G2";
    throw std::invalid_argument(os.str());
  };
  switch (series) {
    case 'A': if (rank < 1) fail(); break;
    case 'B': if (rank < 2) fail(); break;
    case 'C': if (rank < 3) fail(); break;
    case 'D': if (rank < 4) fail(); break;
    case 'E': if (rank < 6 || rank > 8) fail(); break;
    case 'F': if (rank != 4) fail(); break;
    case 'G': if (rank != 2) fail(); break;
    default: fail();
  }
}

// Bourbaki Cartan matrix, cartan(i,j) = <alpha_i, alpha_j^vee>, and the
// simple-root length data w6 = 6*(alpha_i,alpha_i)/2 (long roots norm 2).
void cartan_matrix(char series, int rank, Eigen::MatrixXi& C,
                   std::vector<long long>& w6) {
  const int n = rank;
  C = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  w6.assign(n, 6);
  auto bond = [&](int i, int j) { C(i, j) = -1; C(j, i) = -1; };

  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      C(n - 2, n - 1) = -2;
      w6[n - 1] = 3;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      C(n - 1, n - 2) = -2;
      for (int i = 0; i + 1 < n; ++i) w6[i] = 3;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':  // chain 1-3-4-5-..., node 2 on node 4 (Bourbaki numbering)
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1); bond(1, 2); bond(2, 3);
      C(1, 2) = -2;
      w6[2] = w6[3] = 3;
      break;
    case 'G':  // alpha_1 short
      bond(0, 1);
      C(1, 0) = -3;
      w6[0] = 2;
      break;
  }
}

}  // namespace

bool RootSystem::is_root(const RootVec& v) const {
  if (index_.count(key_of(v))) return true;
  RootVec m = -v;
  return index_.count(key_of(m)) > 0;
}

int RootSystem::positive_index(const RootVec& v) const {
  auto it = index_.find(key_of(v));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::coroot_pairing(const RootVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan(j, i);
  return s;
}

long long RootSystem::norm6(const RootVec& beta) const {
  // (beta,beta) via the symmetrized form G(i,j) = cartan(i,j)*w6(j).
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += static_cast<long long>(beta[i]) * beta[j] * cartan(i, j) * w6_[j];
  return s;
}

void RootSystem::finalize() {
  index_.clear();
  for (int k = 0; k < num_positive(); ++k)
    index_[key_of(positive_roots[k])] = k;
}

RootSystem build_root_system(char series, int rank) {
  check_type(series, rank);
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  cartan_matrix(series, rank, rs.cartan, rs.w6_);

  // Closure by root strings, height by height.  A root beta extends to
  // beta + alpha_i iff q = p - <beta, alpha_i^vee> > 0, with p the length
  // of the known string below beta.
  std::map<std::vector<int>, int> seen;
  std::vector<RootVec> roots;
  for (int i = 0; i < rank; ++i) {
    RootVec a = RootVec::Zero(rank);
    a[i] = 1;
    seen[key_of(a)] = 1;
    roots.push_back(a);
  }
  std::size_t head = 0;
  const int height_cap = 64;  // any simple type fits well below this
  while (head < roots.size()) {
    RootVec beta = roots[head++];
    if (beta.sum() > height_cap)
      throw std::runtime_error("root generation failed to terminate");
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      RootVec down = beta;
      for (;;) {
        down[i] -= 1;
        if (down.isZero() || !seen.count(key_of(down))) break;
        ++p;
      }
      int q = p - rs.coroot_pairing(beta, i);
      if (q > 0) {
        RootVec up = beta;
        up[i] += 1;
        if (!seen.count(key_of(up))) {
          seen[key_of(up)] = 1;
          roots.push_back(up);
        }
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](const RootVec& a, const RootVec& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return lex_less(a, b);
  });
  rs.positive_roots = std::move(roots);
  rs.finalize();
  rs.highest_root_index = highest_root(rs);
  return rs;
}

int highest_root(const RootSystem& rs) {
  int found = -1;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const RootVec& beta = rs.positive_roots[k];
    bool top = true;
    for (int i = 0; i < rs.rank && top; ++i) {
      RootVec up = beta;
      up[i] += 1;
      if (rs.positive_index(up) >= 0) top = false;
    }
    if (top) {
      if (found >= 0) throw std::runtime_error("highest root is not unique");
      found = k;
    }
  }
  if (found < 0) throw std::runtime_error("no highest root found");
  return found;
}

std::pair<int, int> root_string(const RootSystem& rs, const RootVec& a,
                                const RootVec& b) {
  if ((a - b).isZero() || (a + b).isZero())
    throw std::invalid_argument("root_string requires a != +-b");
  int p = 0, q = 0;
  RootVec v = b;
  for (;;) {
    v -= a;
    if (!rs.is_root(v)) break;
    ++p;
  }
  v = b;
  for (;;) {
    v += a;
    if (!rs.is_root(v)) break;
    ++q;
  }
  return {p, q};
}

}  // namespace orbithk
