#include "tmirror/lefschetz.hpp"

#include <deque>

#include "tmirror/clifford.hpp"

namespace tmirror {

namespace {

int n_of(const NSVector& k) { return static_cast<int>(k.c.rows() / 2); }

SparseEchelon::Vec flat(const RatMatrix& m) { return SparseEchelon::from_dense(m); }

}  // namespace

GradedOperator lefschetz_e(const NSVector& kappa) {
  const int n = n_of(kappa), g = 2 * n;
  RatMatrix e(spin_dim(n), spin_dim(n));
  std::vector<RatMatrix> W;
  for (int j = 0; j < g; ++j) W.push_back(wedge_op(g, j));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      if (sgn(kappa.c(i, j)) != 0) e += W[i] * W[j] * kappa.c(i, j);
  return {e, 2};
}

GradedOperator lefschetz_h(int n) {
  RatMatrix h(spin_dim(n), spin_dim(n));
  for (unsigned m = 0; m < spin_dim(n); ++m) h(m, m) = popcount(m) - n;
  return {h, 0};
}

bool hard_lefschetz(const RatMatrix& e, int n) {
  const unsigned N = static_cast<unsigned>(spin_dim(n));
  RatMatrix es = RatMatrix::identity(N);
  for (int s = 0; s <= n; ++s) {
    std::vector<unsigned> src, dst;
    for (unsigned m = 0; m < N; ++m) {
      if (popcount(m) == n - s) src.push_back(m);
      if (popcount(m) == n + s) dst.push_back(m);
    }
    RatMatrix sub(dst.size(), src.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j) sub(i, j) = es(dst[i], src[j]);
    if (sgn(det(sub)) == 0) return false;
    es = e * es;
  }
  return true;
}

namespace {

struct FSystem {
  std::vector<std::pair<unsigned, unsigned>> vars;  // (row, col) of f
  SparseEchelon E{1};
};

FSystem build_f_system(const RatMatrix& e, int n) {
  const unsigned N = static_cast<unsigned>(spin_dim(n));
  FSystem sys;
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  for (unsigned c = 0; c < N; ++c)
    for (unsigned r = 0; r < N; ++r)
      if (popcount(r) + 2 == popcount(c)) {
        index[{r, c}] = sys.vars.size();
        sys.vars.emplace_back(r, c);
      }
  const std::size_t nv = sys.vars.size();
  sys.E = SparseEchelon(nv + 1);
  // (e f - f e)(i, j) = (deg j - n) delta_ij
  for (unsigned i = 0; i < N; ++i)
    for (unsigned j = 0; j < N; ++j) {
      if (popcount(i) != popcount(j)) continue;
      SparseEchelon::Vec row;
      for (unsigned l = 0; l < N; ++l) {
        if (sgn(e(i, l)) != 0) {
          auto it = index.find({l, j});
          if (it != index.end()) row[it->second] += e(i, l);
        }
        if (sgn(e(l, j)) != 0) {
          auto it = index.find({i, l});
          if (it != index.end()) row[it->second] -= e(l, j);
        }
      }
      if (i == j && popcount(i) != n) row[nv] = popcount(i) - n;
      for (auto it = row.begin(); it != row.end();)
        it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
      if (!row.empty()) sys.E.insert(std::move(row));
    }
  return sys;
}

}  // namespace

GradedOperator lefschetz_f(const NSVector& kappa) {
  const int n = n_of(kappa);
  RatMatrix e = lefschetz_e(kappa).mat;
  if (!hard_lefschetz(e, n)) throw NoHardLefschetz();
  FSystem sys = build_f_system(e, n);
  auto sol = sys.E.back_substitute();
  if (!sol || sys.E.rank() != sys.vars.size()) throw NoHardLefschetz("[e, f] = h has no unique solution");
  RatMatrix f(spin_dim(n), spin_dim(n));
  for (std::size_t k = 0; k < sys.vars.size(); ++k) f(sys.vars[k].first, sys.vars[k].second) = (*sol)[k];
  return {f, -2};
}

std::size_t lefschetz_f_nullity(const NSVector& kappa) {
  const int n = n_of(kappa);
  FSystem sys = build_f_system(lefschetz_e(kappa).mat, n);
  std::size_t pivots_in_vars = sys.E.rank() - (sys.E.back_substitute() ? 0 : 1);
  return sys.vars.size() - pivots_in_vars;
}

namespace {

class Closure {
 public:
  explicit Closure(std::size_t N) : E_(N * N) {}

  bool add(GradedOperator op) {
    if (!E_.insert(flat(op.mat))) return false;
    L_.ops.push_back(std::move(op));
    L_.dim = L_.ops.size();
    return true;
  }

  LieAlgebraBasis close(const std::vector<GradedOperator>& gens, std::size_t cap) {
    std::deque<std::size_t> todo;
    for (const auto& g : gens)
      if (add(g)) todo.push_back(L_.ops.size() - 1);
    while (!todo.empty() && L_.dim < cap) {
      std::size_t k = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        GradedOperator y{commutator(g.mat, L_.ops[k].mat), g.degree + L_.ops[k].degree};
        if (y.mat.is_zero()) continue;
        if (add(std::move(y))) todo.push_back(L_.ops.size() - 1);
      }
    }
    return L_;
  }

 private:
  SparseEchelon E_;
  LieAlgebraBasis L_;
};

}  // namespace

LieAlgebraBasis generate_g_ns(const Torus& A, const std::vector<NSVector>& kappas) {
  const int n = A.n;
  std::vector<GradedOperator> gens{lefschetz_h(n)};
  std::vector<RatMatrix> seen;
  for (const auto& k : kappas) {
    if (std::find(seen.begin(), seen.end(), k.c) != seen.end()) continue;
    seen.push_back(k.c);
    gens.push_back(lefschetz_e(k));
    gens.push_back(lefschetz_f(k));
  }
  const std::size_t N = spin_dim(n);
  return Closure(N).close(gens, N * N);
}

std::vector<NSVector> default_kappas(const Torus& A, int budget, std::size_t limit) {
  auto basis = ns_basis(A);
  std::vector<NSVector> out;
  enumerate_by_max_norm(basis.size(), budget, [&](const std::vector<int>& v) {
    RatMatrix c(A.J.rows(), A.J.rows());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) c += basis[k].c * Rat(v[k]);
    NSVector kap{c};
    if (hard_lefschetz(lefschetz_e(kap).mat, A.n)) out.push_back(kap);
    return out.size() >= limit;
  });
  return out;
}

RatMatrix chi_form(int n) {
  const unsigned g = 2 * n, N = 1u << g, full = N - 1;
  RatMatrix G(N, N);
  for (unsigned a = 0; a < N; ++a) {
    unsigned b = full & ~a;
    int inv = 0;
    for (unsigned j = 0; j < g; ++j)
      if (b & (1u << j)) inv += popcount(a >> (j + 1));
    int d = popcount(a) - n;
    int q = d >= 0 ? d / 2 : -((-d + 1) / 2);
    G(a, b) = ((inv + q) % 2 == 0) ? 1 : -1;
  }
  return G;
}

bool preserves_chi(const RatMatrix& g, int n) {
  RatMatrix G = chi_form(n);
  return (g.transpose() * G + G * g).is_zero();
}

LieAlgebraBasis so_lambda_spinor_image(const Torus& A) {
  const int n = A.n;
  const std::size_t L = 4 * static_cast<std::size_t>(n), g = 2 * static_cast<std::size_t>(n);
  std::vector<RatMatrix> gen;
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Int> e(L);
    e[k] = 1;
    gen.push_back(cor_matrix(n, e));
  }
  Closure c(spin_dim(n));
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a + 1; b < L; ++b) {
      int deg = (a < g ? -1 : 1) + (b < g ? -1 : 1);
      c.add({commutator(gen[a], gen[b]) * Rat(1, 2), deg});
    }
  return c.close({}, 0);
}

bool in_span(const LieAlgebraBasis& L, const RatMatrix& X) {
  if (L.ops.empty()) return X.is_zero();
  const std::size_t N = L.ops[0].mat.rows();
  SparseEchelon E(N * N);
  for (const auto& op : L.ops) E.insert(flat(op.mat));
  return E.contains(flat(X));
}

bool bracket_closed(const LieAlgebraBasis& L) {
  if (L.ops.empty()) return true;
  const std::size_t N = L.ops[0].mat.rows();
  SparseEchelon E(N * N);
  for (const auto& op : L.ops) E.insert(flat(op.mat));
  for (std::size_t a = 0; a < L.ops.size(); ++a)
    for (std::size_t b = a + 1; b < L.ops.size(); ++b)
      if (!E.contains(flat(commutator(L.ops[a].mat, L.ops[b].mat)))) return false;
  return true;
}

}  // namespace tmirror
