#include "orbithk/chevalley.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbithk {

namespace {

struct Frac {
  long long n = 0;
  long long d = 1;
  Frac() = default;
  Frac(long long a, long long b = 1) : n(a), d(b) { norm(); }
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  Frac operator/(const Frac& o) const { return Frac(n * o.d, d * o.n); }
  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator-() const { return Frac(-n, d); }
  long long as_int() const {
    if (d != 1) throw std::runtime_error("non-integer structure constant");
    return n;
  }
};

std::vector<int> key2(const RootVec& a, const RootVec& b) {
  std::vector<int> k(a.data(), a.data() + a.size());
  k.insert(k.end(), b.data(), b.data() + b.size());
  return k;
}

// Chevalley constants N_{a,b} over all root pairs, determined by the
// extraspecial-pair choice N_{c,d} = p+1 and the standard relations
//   N_{a,b} = -N_{b,a},  N_{-a,-b} = -N_{a,b},
//   N_{a,b}/(z,z) = N_{b,z}/(a,a) = N_{z,a}/(b,b)   for a+b+z = 0,
// with the remaining special pairs pinned down by the Jacobi identity.
class Constants {
public:
  explicit Constants(const RootSystem& rs) : rs_(rs) {
    // extraspecial pair per non-simple positive root: minimal c (height-lex
    // order, hence simple) with gamma - c again a positive root
    es_.assign(rs.num_positive(), -1);
    for (int g = 0; g < rs.num_positive(); ++g) {
      const RootVec& gamma = rs.positive_roots[g];
      if (gamma.sum() < 2) continue;
      for (int c = 0; c < rs.num_positive(); ++c) {
        RootVec d = gamma - rs.positive_roots[c];
        if (rs.positive_index(d) >= 0) { es_[g] = c; break; }
      }
      if (es_[g] < 0) throw std::runtime_error("no extraspecial pair found");
    }
  }

  long long N(const RootVec& a, const RootVec& b) { return Nfrac(a, b).as_int(); }

private:
  Frac Nfrac(const RootVec& a, const RootVec& b) {
    auto key = key2(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Frac v = compute(a, b);
    memo_.emplace(std::move(key), v);
    return v;
  }

  Frac compute(const RootVec& a, const RootVec& b) {
    const int ia = rs_.positive_index(a);
    const int ib = rs_.positive_index(b);
    if (ia >= 0 && ib >= 0) {
      if (ia > ib) return -Nfrac(b, a);
      RootVec gamma = a + b;
      int g = rs_.positive_index(gamma);
      int c = es_[g];
      if (c == ia) {  // extraspecial: sign fixed, magnitude p+1
        int p = 0;
        RootVec v = b;
        for (;;) {
          v -= a;
          if (v.isZero() || !rs_.is_root(v)) break;
          ++p;
        }
        return Frac(p + 1);
      }
      // Jacobi identity on (e_{-c}, e_a, e_b)
      const RootVec& cv = rs_.positive_roots[c];
      RootVec dv = gamma - cv;
      Frac Ncg = Nfrac(cv, dv) * Frac(rs_.norm6(dv)) / Frac(rs_.norm6(gamma));
      Frac acc(0);
      RootVec bc = b - cv;
      if (rs_.is_root(bc)) acc = acc + Nfrac(b, RootVec(-cv)) * Nfrac(a, bc);
      RootVec ac = a - cv;
      if (rs_.is_root(ac)) acc = acc + Nfrac(RootVec(-cv), a) * Nfrac(b, ac);
      return -acc / Ncg;
    }
    if (ia < 0 && ib < 0) {
      bool aneg = rs_.positive_index(RootVec(-a)) >= 0;
      bool bneg = rs_.positive_index(RootVec(-b)) >= 0;
      if (!aneg || !bneg) throw std::runtime_error("N on non-roots");
      return -Nfrac(RootVec(-a), RootVec(-b));
    }
    // mixed signs: rotate through z = -(a+b) to a same-signed pair
    RootVec z = -(a + b);
    bool zpos = rs_.positive_index(z) >= 0;
    bool bpos = ib >= 0;
    if (bpos == zpos)
      return Nfrac(b, z) * Frac(rs_.norm6(z)) / Frac(rs_.norm6(a));
    return Nfrac(z, a) * Frac(rs_.norm6(z)) / Frac(rs_.norm6(b));
  }

  const RootSystem& rs_;
  std::vector<int> es_;
  std::map<std::vector<int>, Frac> memo_;
};

SparseBracket negate(const SparseBracket& s) {
  SparseBracket r = s;
  for (auto& [k, c] : r) c = -c;
  return r;
}

long long lookup(const SparseBracket& s, int k) {
  for (const auto& [i, c] : s)
    if (i == k) return c;
  return 0;
}

}  // namespace

std::string LieAlgebra::basis_name(int idx) const {
  std::ostringstream os;
  if (idx < rank) {
    os << "h" << (idx + 1);
  } else if (idx < rank + npos) {
    os << "e[" << rs.positive_roots[idx - rank].transpose() << "]";
  } else {
    os << "f[" << rs.positive_roots[idx - rank - npos].transpose() << "]";
  }
  return os.str();
}

SparseBracket LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) return table_[static_cast<std::size_t>(i) * dim + j];
  return negate(table_[static_cast<std::size_t>(j) * dim + i]);
}

Element LieAlgebra::basis_element(int idx) const {
  Element v = zero();
  v[idx] = 1.0;
  return v;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  Element r = zero();
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const SparseBracket& s = table_[static_cast<std::size_t>(i) * dim + j];
      if (s.empty()) continue;
      const std::complex<double> w = x[i] * y[j] - x[j] * y[i];
      if (w == 0.0) continue;
      for (const auto& [k, c] : s) r[k] += w * static_cast<double>(c);
    }
  }
  return r;
}

Element LieAlgebra::sigma(const Element& x) const {
  Element r = zero();
  for (int i = 0; i < dim; ++i) r[sigma_perm_[i]] = -std::conj(x[i]);
  return r;
}

std::complex<double> LieAlgebra::pairing(const Element& x, const Element& y) const {
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("pairing: dimension mismatch");
  return -(x.transpose() * killing_d_ * y)(0);
}

double LieAlgebra::eta(const Element& x) const {
  return pairing(x, sigma(x)).real();
}

std::complex<double> LieAlgebra::herm(const Element& v, const Element& w) const {
  return pairing(v, sigma(w));
}

long long LieAlgebra::lambda_sq() const {
  return killing_(e_index(theta), f_index(theta));
}

Eigen::MatrixXcd LieAlgebra::ad(const Element& x) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const SparseBracket& s = table_[static_cast<std::size_t>(i) * dim + j];
      for (const auto& [k, c] : s) {
        if (x[i] != 0.0) m(k, j) += x[i] * static_cast<double>(c);
        if (x[j] != 0.0) m(k, i) -= x[j] * static_cast<double>(c);
      }
    }
  }
  return m;
}

void LieAlgebra::finalize_derived() {
  // sigma permutation
  sigma_perm_.resize(dim);
  for (int i = 0; i < rank; ++i) sigma_perm_[h_index(i)] = h_index(i);
  for (int k = 0; k < npos; ++k) {
    sigma_perm_[e_index(k)] = f_index(k);
    sigma_perm_[f_index(k)] = e_index(k);
  }
  // Killing matrix by exact ad-trace: kappa(i,j) = sum_k c_{ik}^l c_{jl}^k
  killing_.setZero(dim, dim);
  std::vector<std::vector<SparseBracket>> rows(dim);
  for (int i = 0; i < dim; ++i) {
    rows[i].resize(dim);
    for (int k = 0; k < dim; ++k) rows[i][k] = bracket_basis(i, k);
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      long long s = 0;
      for (int k = 0; k < dim; ++k)
        for (const auto& [l, c1] : rows[i][k]) s += c1 * lookup(rows[j][l], k);
      killing_(i, j) = killing_(j, i) = s;
    }
  }
  killing_d_ = killing_.cast<double>();
}

LieAlgebra build_algebra(const RootSystem& rs) {
  LieAlgebra L;
  L.rs = rs;
  L.rank = rs.rank;
  L.npos = rs.num_positive();
  L.dim = rs.dimension();
  L.theta = rs.highest_root_index;
  L.table_.assign(static_cast<std::size_t>(L.dim) * L.dim, {});

  Constants cst(rs);
  auto set = [&](int i, int j, SparseBracket s) {
    L.table_[static_cast<std::size_t>(i) * L.dim + j] = std::move(s);
  };

  // coroot of beta in the simple-coroot basis: exact integers
  auto coroot = [&](int k) {
    const RootVec& beta = rs.positive_roots[k];
    long long nb = rs.norm6(beta);
    SparseBracket s;
    for (int j = 0; j < rs.rank; ++j) {
      if (beta[j] == 0) continue;
      long long num = 2LL * beta[j] * rs.simple_weight6(j);
      if (num % nb != 0) throw std::runtime_error("non-integral coroot");
      s.push_back({L.h_index(j), num / nb});
    }
    return s;
  };

  for (int i = 0; i < rs.rank; ++i) {
    for (int k = 0; k < L.npos; ++k) {
      int n = rs.coroot_pairing(rs.positive_roots[k], i);
      if (n != 0) {
        set(L.h_index(i), L.e_index(k), {{L.e_index(k), n}});
        set(L.h_index(i), L.f_index(k), {{L.f_index(k), -n}});
      }
    }
  }
  for (int k = 0; k < L.npos; ++k) {
    const RootVec& bk = rs.positive_roots[k];
    for (int l = 0; l < L.npos; ++l) {
      const RootVec& bl = rs.positive_roots[l];
      if (k < l) {
        RootVec s = bk + bl;
        int si = rs.positive_index(s);
        if (si >= 0) {
          long long n = cst.N(bk, bl);
          set(L.e_index(k), L.e_index(l), {{L.e_index(si), n}});
          set(L.f_index(k), L.f_index(l), {{L.f_index(si), -n}});
        }
      }
      if (k == l) {
        set(L.e_index(k), L.f_index(k), coroot(k));
        continue;
      }
      RootVec d = bk - bl;
      if (rs.is_root(d)) {
        long long n = cst.N(bk, RootVec(-bl));
        int pi = rs.positive_index(d);
        int target = pi >= 0 ? L.e_index(pi) : L.f_index(rs.positive_index(RootVec(-d)));
        set(L.e_index(k), L.f_index(l), {{target, n}});  // e-index < f-index always
      }
    }
  }
  L.finalize_derived();
  return L;
}

std::string cache_file_name(const RootSystem& rs) {
  return rs.name() + ".scc";
}

bool save_structure_cache(const LieAlgebra& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) return false;
  out << L.rs.series << ' ' << L.rs.rank << ' ' << LieAlgebra::kConventionVersion
      << '\n';
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      for (const auto& [k, c] : L.table_[static_cast<std::size_t>(i) * L.dim + j])
        out << i << ' ' << j << ' ' << k << ' ' << c << '\n';
  return static_cast<bool>(out);
}

namespace {

bool load_structure_cache(LieAlgebra& L, const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string series, version;
  int rank = 0;
  if (!(in >> series >> rank >> version)) return false;
  if (series != std::string(1, L.rs.series) || rank != L.rs.rank ||
      version != LieAlgebra::kConventionVersion)
    return false;
  L.table_.assign(static_cast<std::size_t>(L.dim) * L.dim, {});
  long long i, j, k, c;
  while (in >> i >> j >> k >> c) {
    if (i < 0 || j <= i || j >= L.dim || k < 0 || k >= L.dim || c == 0)
      return false;
    L.table_[static_cast<std::size_t>(i) * L.dim + j].push_back(
        {static_cast<int>(k), c});
  }
  if (!in.eof()) return false;
  // quick sanity: [e_k, f_k] must land in the Cartan for every root
  for (int r = 0; r < L.npos; ++r) {
    const auto& s = L.table_[static_cast<std::size_t>(L.e_index(r)) * L.dim +
                             L.f_index(r)];
    if (s.empty()) return false;
    for (const auto& [idx, cc] : s)
      if (idx >= L.rank) return false;
  }
  return true;
}

}  // namespace

LieAlgebra build_algebra_cached(const RootSystem& rs, const std::string& cache_dir,
                                std::vector<std::string>* warnings) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(cache_dir) / cache_file_name(rs);
  LieAlgebra L;
  L.rs = rs;
  L.rank = rs.rank;
  L.npos = rs.num_positive();
  L.dim = rs.dimension();
  L.theta = rs.highest_root_index;
  if (fs::exists(p)) {
    if (load_structure_cache(L, p.string())) {
      L.finalize_derived();
      return L;
    }
    if (warnings)
      warnings->push_back("structure-constant cache " + p.string() +
                          " corrupt or stale; rebuilt");
  }
  L = build_algebra(rs);
  std::error_code ec;
  fs::create_directories(fs::path(cache_dir), ec);
  save_structure_cache(L, p.string());
  return L;
}

long long killing_block_rule(const LieAlgebra& L, int i, int j) {
  const RootSystem& rs = L.rs;
  auto cartan_kappa = [&](int a, int b) {
    // kappa(h_a, h_b) = sum over all roots of <beta,h_a><beta,h_b>
    long long s = 0;
    for (const auto& beta : rs.positive_roots)
      s += 2LL * rs.coroot_pairing(beta, a) * rs.coroot_pairing(beta, b);
    return s;
  };
  const int r = L.rank, P = L.npos;
  if (i > j) std::swap(i, j);
  if (i < r && j < r) return cartan_kappa(i, j);
  if (i < r || j < r) return 0;          // Cartan vs root space
  int ki = (i - r) % P, kj = (j - r) % P;
  bool ei = i < r + P, ej = j < r + P;
  if (ei == ej || ki != kj) return 0;    // grading: only e_beta with f_beta
  // kappa(e,f) = kappa(h_beta, h_beta) / <beta, h_beta> = kappa(h_b,h_b)/2
  SparseBracket cor = L.bracket_basis(L.e_index(ki), L.f_index(ki));
  long long s = 0;
  for (const auto& [a, ca] : cor)
    for (const auto& [b, cb] : cor) s += ca * cb * cartan_kappa(a, b);
  if (s % 2 != 0) throw std::runtime_error("block-rule parity failure");
  return s / 2;
}

Element random_element(const LieAlgebra& L, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Element v = L.zero();
  for (int i = 0; i < L.dim; ++i) v[i] = std::complex<double>(g(rng), g(rng));
  return v;
}

VerifyReport verify_algebra(const LieAlgebra& L, int random_trials,
                            std::uint64_t seed) {
  VerifyReport rep;
  const int n = L.dim;

  auto sparse_of = [&](int i, int j) { return L.bracket_basis(i, j); };
  auto add_scaled = [](std::map<int, long long>& acc, const SparseBracket& s,
                       long long w) {
    for (const auto& [k, c] : s) {
      acc[k] += w * c;
      if (acc[k] == 0) acc.erase(k);
    }
  };
  auto bracket_basis_sparse = [&](int i, const std::map<int, long long>& y) {
    std::map<int, long long> r;
    for (const auto& [j, cy] : y) add_scaled(r, sparse_of(i, j), cy);
    return r;
  };

  // Jacobi, exact, all basis triples
  {
    long long bad = 0;
    std::string detail;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::map<int, long long> bij;
        add_scaled(bij, sparse_of(i, j), 1);
        for (int k = j + 1; k < n; ++k) {
          std::map<int, long long> acc;
          std::map<int, long long> bjk, bki;
          add_scaled(bjk, sparse_of(j, k), 1);
          add_scaled(bki, sparse_of(k, i), 1);
          for (const auto& [idx, c] : bracket_basis_sparse(i, bjk)) acc[idx] += c;
          for (const auto& [idx, c] : bracket_basis_sparse(j, bki)) acc[idx] += c;
          for (const auto& [idx, c] : bracket_basis_sparse(k, bij)) acc[idx] += c;
          for (const auto& [idx, c] : acc) {
            (void)idx;
            if (c != 0) {
              if (bad == 0) {
                std::ostringstream os;
                os << "first failure at (" << L.basis_name(i) << ", "
                   << L.basis_name(j) << ", " << L.basis_name(k) << ")";
                detail = os.str();
              }
              ++bad;
              break;
            }
          }
        }
      }
    }
    rep.checks.push_back({"jacobi_exact", static_cast<double>(bad), 0.5,
                          bad == 0, detail});
  }

  // Killing ad-invariance, exact: kappa([z,x],y) + kappa(x,[z,y]) = 0
  {
    long long bad = 0;
    for (int z = 0; z < n && bad == 0; ++z)
      for (int x = 0; x < n && bad == 0; ++x) {
        SparseBracket zx = sparse_of(z, x);
        for (int y = 0; y < n; ++y) {
          long long s = 0;
          for (const auto& [k, c] : zx) s += c * L.killing_exact(k, y);
          for (const auto& [k, c] : sparse_of(z, y)) s += c * L.killing_exact(x, k);
          if (s != 0) { ++bad; break; }
        }
      }
    rep.checks.push_back({"killing_ad_invariance_exact",
                          static_cast<double>(bad), 0.5, bad == 0, ""});
  }

  // sigma is an antilinear automorphism: exact on basis pairs
  {
    long long bad = 0;
    auto sperm = [&](int i) { return L.sigma_perm_[i]; };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // sigma[x_i,x_j] vs [sigma x_i, sigma x_j]; both are integer combos
        std::map<int, long long> lhs, rhs;
        for (const auto& [k, c] : sparse_of(i, j)) lhs[sperm(k)] -= c;
        for (const auto& [k, c] : sparse_of(sperm(i), sperm(j))) rhs[k] += c;
        if (lhs != rhs) ++bad;
      }
    rep.checks.push_back({"sigma_automorphism_exact", static_cast<double>(bad),
                          0.5, bad == 0, ""});
  }

  // |N_{a,b}| = p+1 for all positive pairs with a+b a root
  {
    long long bad = 0;
    for (int k = 0; k < L.npos; ++k)
      for (int l = k + 1; l < L.npos; ++l) {
        RootVec s = L.rs.positive_roots[k] + L.rs.positive_roots[l];
        int si = L.rs.positive_index(s);
        if (si < 0) continue;
        auto [p, q] = root_string(L.rs, L.rs.positive_roots[k],
                                  L.rs.positive_roots[l]);
        (void)q;
        long long c = lookup(sparse_of(L.e_index(k), L.e_index(l)), L.e_index(si));
        if (std::abs(c) != p + 1) ++bad;
      }
    rep.checks.push_back({"root_string_magnitudes", static_cast<double>(bad),
                          0.5, bad == 0, ""});
  }

  // Killing ad-trace vs block-rule oracle on random basis pairs
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long bad = 0;
    for (int t = 0; t < 100; ++t) {
      int i = pick(rng), j = pick(rng);
      if (L.killing_exact(i, j) != killing_block_rule(L, i, j)) ++bad;
    }
    rep.checks.push_back({"killing_block_rule_crosscheck",
                          static_cast<double>(bad), 0.5, bad == 0, ""});
  }

  // sigma involution + antilinearity and eta positivity on random vectors
  {
    std::mt19937_64 rng(seed + 1);
    double max_res = 0.0;
    double min_eta = std::numeric_limits<double>::infinity();
    for (int t = 0; t < random_trials; ++t) {
      Element x = random_element(L, rng);
      max_res = std::max(max_res, (L.sigma(L.sigma(x)) - x).norm());
      std::complex<double> lam(0.3, -1.7);
      max_res = std::max(
          max_res, (L.sigma(Element(lam * x)) - std::conj(lam) * L.sigma(x)).norm());
      min_eta = std::min(min_eta, L.eta(x));
    }
    rep.checks.push_back({"sigma_involution", max_res, 1e-12, max_res < 1e-12, ""});
    rep.checks.push_back({"eta_positivity", min_eta > 0 ? 0.0 : 1.0, 0.5,
                          min_eta > 0, "min eta = " + std::to_string(min_eta)});
  }

  return rep;
}

}  // namespace orbithk
