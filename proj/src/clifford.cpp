#include "tmirror/clifford.hpp"

#include "tmirror/pairspace.hpp"

namespace tmirror {

bool SpinVec::operator==(const SpinVec& o) const {
  if (n != o.n) return false;
  auto strip = [](const std::map<unsigned, Int>& m) {
    std::map<unsigned, Int> r;
    for (const auto& [k, v] : m)
      if (sgn(v) != 0) r.emplace(k, v);
    return r;
  };
  return strip(coeffs) == strip(o.coeffs);
}

std::string to_string(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }

RatMatrix to_column(const SpinVec& v) {
  RatMatrix c(spin_dim(v.n), 1);
  for (const auto& [m, x] : v.coeffs) c(m, 0) += Rat(x);
  return c;
}

SpinVec from_column(int n, const RatMatrix& col) {
  SpinVec v{n, {}};
  for (std::size_t m = 0; m < col.rows(); ++m) {
    if (sgn(col(m, 0)) == 0) continue;
    if (col(m, 0).get_den() != 1) throw NotIntegral("spinor has fractional coefficients");
    v.coeffs[static_cast<unsigned>(m)] = col(m, 0).get_num();
  }
  return v;
}

namespace {

inline int below(unsigned mask, unsigned j) { return popcount(mask & ((1u << j) - 1)); }

}  // namespace

RatMatrix wedge_op(int g, unsigned j) {
  const std::size_t N = std::size_t{1} << g;
  RatMatrix W(N, N);
  for (unsigned m = 0; m < N; ++m) {
    if (m & (1u << j)) continue;
    W(m | (1u << j), m) = (below(m, j) % 2) ? -1 : 1;
  }
  return W;
}

RatMatrix contraction_op(int g, const std::vector<Rat>& f) {
  const std::size_t N = std::size_t{1} << g;
  RatMatrix C(N, N);
  for (unsigned m = 0; m < N; ++m)
    for (unsigned j = 0; j < static_cast<unsigned>(g); ++j) {
      if (!(m & (1u << j)) || sgn(f[j]) == 0) continue;
      Rat v = f[j];
      if (below(m, j) % 2) v = -v;
      C(m & ~(1u << j), m) += v;
    }
  return C;
}

RatMatrix cor_matrix(int n, const std::vector<Int>& lambda) {
  const int g = 2 * n;
  if (lambda.size() != static_cast<std::size_t>(2 * g)) throw ShapeError("lambda must have 4n entries");
  std::vector<Rat> f(g);
  for (int j = 0; j < g; ++j) f[j] = Rat(lambda[j]);
  RatMatrix X = contraction_op(g, f);
  for (int j = 0; j < g; ++j)
    if (sgn(lambda[g + j]) != 0) X += wedge_op(g, j) * Rat(lambda[g + j]);
  return X;
}

SpinVec cor_action(const std::vector<Int>& lambda, const SpinVec& v) {
  int n = static_cast<int>(lambda.size() / 4);
  if (v.n != n) throw ShapeError("spinor and lambda dimensions differ");
  return from_column(n, cor_matrix(n, lambda) * to_column(v));
}

IsotropicSplitting standard_splitting(int n) {
  const std::size_t N = 2 * static_cast<std::size_t>(n);
  IsotropicSplitting s{IntMatrix(2 * N, N), IntMatrix(2 * N, N)};
  for (std::size_t i = 0; i < N; ++i) {
    s.basis1(i, i) = 1;
    s.basis2(N + i, i) = 1;
  }
  return s;
}

namespace {

RatMatrix basis_matrix(const IsotropicSplitting& s) {
  return hstack(to_rat(s.basis1), to_rat(s.basis2));
}

}  // namespace

void validate_splitting(const IsotropicSplitting& s) {
  const std::size_t L = s.basis1.rows();
  if (L % 4 || s.basis2.rows() != L || s.basis1.cols() != L / 2 || s.basis2.cols() != L / 2)
    throw NotABasis("splitting bases must be 4n x 2n");
  if (!is_unimodular(to_int(basis_matrix(s)))) throw NotABasis();
  RatMatrix Q = to_rat(q_form(static_cast<int>(L / 4)));
  RatMatrix b1 = to_rat(s.basis1), b2 = to_rat(s.basis2);
  if (!(b1.transpose() * Q * b1).is_zero() || !(b2.transpose() * Q * b2).is_zero())
    throw NotIsotropic();
}

SplitModule::SplitModule(const IsotropicSplitting& s) {
  validate_splitting(s);
  const std::size_t L = s.basis1.rows(), g = L / 2;
  n_ = static_cast<int>(L / 4);
  RatMatrix Pinv = invert(basis_matrix(s));
  RatMatrix Q = to_rat(q_form(n_));
  RatMatrix QN = Q * to_rat(s.basis2);  // column j: Q n_j
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Rat> f(g);
    for (std::size_t j = 0; j < g; ++j) f[j] = QN(k, j);
    RatMatrix X = contraction_op(static_cast<int>(g), f);
    for (std::size_t j = 0; j < g; ++j)
      if (sgn(Pinv(g + j, k)) != 0) X += wedge_op(static_cast<int>(g), static_cast<unsigned>(j)) * Pinv(g + j, k);
    gens_.push_back(std::move(X));
  }
}

RatMatrix SplitModule::cor(const RatMatrix& lambda) const {
  RatMatrix X(gens_[0].rows(), gens_[0].cols());
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (sgn(lambda(k, 0)) != 0) X += gens_[k] * lambda(k, 0);
  return X;
}

RatMatrix SplitModule::apply(const RatMatrix& lambda, const RatMatrix& v) const {
  RatMatrix out(v.rows(), v.cols());
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (sgn(lambda(k, 0)) != 0) out += (gens_[k] * v) * lambda(k, 0);
  return out;
}

RatMatrix mukai_pairing(int n) {
  const unsigned g = 2 * n, N = 1u << g, full = N - 1;
  RatMatrix G(N, N);
  for (unsigned S = 0; S < N; ++S) {
    unsigned T = full & ~S;
    int inv = 0;
    for (unsigned j = 0; j < g; ++j)
      if (T & (1u << j)) inv += popcount(S >> (j + 1));
    int k = popcount(S);
    inv += k * (k - 1) / 2;
    G(S, T) = (inv % 2) ? -1 : 1;
  }
  return G;
}

CliffordOp clifford_involution(const CliffordOp& z) {
  int g = 0;
  while ((std::size_t{1} << g) < z.rows()) ++g;
  RatMatrix G = mukai_pairing(g / 2);
  return G.transpose() * z.transpose() * G;
}

bool is_even_op(const CliffordOp& z) {
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (sgn(z(i, j)) != 0 && (popcount(i) + popcount(j)) % 2) return false;
  return true;
}

bool is_odd_op(const CliffordOp& z) {
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (sgn(z(i, j)) != 0 && (popcount(i) + popcount(j)) % 2 == 0) return false;
  return true;
}

std::optional<std::vector<Int>> decode_cor(int n, const RatMatrix& X) {
  const unsigned g = 2 * n;
  std::vector<Int> lambda(2 * g);
  for (unsigned j = 0; j < g; ++j) {
    const Rat& a = X(0, 1u << j);
    const Rat& b = X(1u << j, 0);
    if (a.get_den() != 1 || b.get_den() != 1) return std::nullopt;
    lambda[j] = a.get_num();
    lambda[g + j] = b.get_num();
  }
  if (cor_matrix(n, lambda) != X) return std::nullopt;
  return lambda;
}

namespace {

int dim_to_n(std::size_t N) {
  int g = 0;
  while ((std::size_t{1} << g) < N) ++g;
  if ((std::size_t{1} << g) != N || g % 2) throw ShapeError("operator size is not 2^{2n}");
  return g / 2;
}

std::optional<IntMatrix> conjugation_matrix(const CliffordOp& z) {
  if (!z.square()) throw ShapeError("Clifford operator must be square");
  const int n = dim_to_n(z.rows());
  if (!is_even_op(z)) {
    if (is_odd_op(z)) return std::nullopt;
    throw NotEven();
  }
  CliffordOp zp = clifford_involution(z);
  if (z * zp != RatMatrix::identity(z.rows())) return std::nullopt;
  const std::size_t L = 4 * n;
  IntMatrix r(L, L);
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Int> e(L);
    e[k] = 1;
    auto lam = decode_cor(n, z * cor_matrix(n, e) * zp);
    if (!lam) return std::nullopt;
    for (std::size_t i = 0; i < L; ++i) r(i, k) = (*lam)[i];
  }
  if (!is_unimodular(r)) return std::nullopt;
  return r;
}

}  // namespace

bool is_spin(const CliffordOp& z) { return conjugation_matrix(z).has_value(); }

IntMatrix r_of_z(const CliffordOp& z) {
  auto r = conjugation_matrix(z);
  if (!r) throw NotSpin();
  return *r;
}

namespace {

void normalize_sign(RatMatrix& T) {
  for (const auto& x : T.data())
    if (sgn(x) != 0) {
      if (sgn(x) < 0) T = -T;
      return;
    }
}

// Columns: images of the s1 monomial basis, given the image w of the s1 vacuum.
RatMatrix extend_from_vacuum(const IsotropicSplitting& s1, const SplitModule& m2, const RatMatrix& w) {
  const std::size_t N = w.rows();
  const std::size_t g = s1.basis2.cols();
  std::vector<RatMatrix> B;
  for (std::size_t j = 0; j < g; ++j) B.push_back(m2.cor(to_rat(s1.basis2.col(j))));
  RatMatrix T(N, N);
  std::vector<RatMatrix> cols(N);
  cols[0] = w;
  for (unsigned S = 1; S < N; ++S) {
    unsigned low = __builtin_ctz(S);
    cols[S] = B[low] * cols[S & (S - 1)];
  }
  for (std::size_t S = 0; S < N; ++S) T.set_block(0, S, cols[S]);
  RatMatrix P = to_rat(primitive(T));
  normalize_sign(P);
  return P;
}

}  // namespace

RatMatrix beta_iso(const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  validate_splitting(s1);
  SplitModule m2(s2);
  const std::size_t N = m2.generator(0).rows();
  RatMatrix K = RatMatrix::identity(N);
  for (std::size_t i = 0; i < s1.basis1.cols() && K.cols() > 0; ++i) {
    RatMatrix A = m2.cor(to_rat(s1.basis1.col(i))) * K;
    K = K * nullspace(A);
  }
  if (K.cols() != 1) throw NoIntertwiner("vacuum space is not one-dimensional");
  return extend_from_vacuum(s1, m2, to_rat(primitive(K)));
}

RatMatrix beta_iso_adapted(const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  validate_splitting(s1);
  SplitModule m2(s2);
  const std::size_t g = s1.basis1.cols();
  RatMatrix span = to_rat(s2.basis1);
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < g; ++i) {
    RatMatrix next = hstack(span, to_rat(s1.basis1.col(i)));
    if (rank(next) > rank(span)) {
      span = std::move(next);
      comp.push_back(i);
    }
  }
  if (comp.size() == g) throw NoIntertwiner("splittings share no isotropic direction");
  const std::size_t N = m2.generator(0).rows();
  RatMatrix w(N, 1);
  w(0, 0) = 1;
  for (std::size_t k = comp.size(); k-- > 0;) w = m2.cor(to_rat(s1.basis1.col(comp[k]))) * w;
  if (w.is_zero()) throw NoIntertwiner("complementary monomial kills the vacuum");
  return extend_from_vacuum(s1, m2, w);
}

std::vector<RatMatrix> intertwiner_space(const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  SplitModule m1(s1), m2(s2);
  const std::size_t N = m1.generator(0).rows();
  const std::size_t vars = N * N;
  SparseEchelon E(vars);
  for (std::size_t k = 0; k < 4 * static_cast<std::size_t>(m1.n()); ++k) {
    const RatMatrix& C1 = m1.generator(k);
    const RatMatrix& C2 = m2.generator(k);
    // (T C1 - C2 T)(i, j) = sum_l T(i,l) C1(l,j) - C2(i,l) T(l,j)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        SparseEchelon::Vec row;
        for (std::size_t l = 0; l < N; ++l) {
          if (sgn(C1(l, j)) != 0) row[i * N + l] += C1(l, j);
          if (sgn(C2(i, l)) != 0) row[l * N + j] -= C2(i, l);
        }
        for (auto it = row.begin(); it != row.end();)
          it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
        if (!row.empty()) E.insert(std::move(row));
      }
  }
  std::vector<RatMatrix> basis;
  for (const auto& x : E.kernel()) {
    RatMatrix T(N, N);
    for (std::size_t v = 0; v < vars; ++v) T(v / N, v % N) = x[v];
    basis.push_back(std::move(T));
  }
  return basis;
}

bool intertwines(const RatMatrix& T, const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  SplitModule m1(s1), m2(s2);
  for (std::size_t k = 0; k < 4 * static_cast<std::size_t>(m1.n()); ++k)
    if (T * m1.generator(k) != m2.generator(k) * T) return false;
  return true;
}

std::size_t isotropic_intersection_dim(const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  RatMatrix both = hstack(to_rat(s1.basis1), to_rat(s2.basis1));
  return s1.basis1.rows() - rank(both);
}

Parity beta_parity(const RatMatrix& T, const IsotropicSplitting& s1, const IsotropicSplitting& s2) {
  bool even = is_even_op(T), odd = is_odd_op(T);
  if (even == odd) throw MixedParity();
  Parity p = even ? Parity::Even : Parity::Odd;
  Parity expected = isotropic_intersection_dim(s1, s2) % 2 ? Parity::Odd : Parity::Even;
  if (p != expected) throw MixedParity("parity disagrees with the isotropic intersection dimension");
  return p;
}

}  // namespace tmirror
