#include "tmirror/exactlin.hpp"

#include <algorithm>

namespace tmirror {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw NotIntegral();
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  RatMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RatMatrix block2(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

bool is_symmetric(const RatMatrix& m) { return m.square() && m == m.transpose(); }
bool is_skew(const RatMatrix& m) { return m.square() && m == -m.transpose(); }

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rat t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rat det(const RatMatrix& m0) {
  if (!m0.square()) throw ShapeError("det of non-square matrix");
  RatMatrix m = m0;
  const std::size_t n = m.rows();
  Rat d = 1, t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) {
        t = f * m(c, j);
        m(i, j) -= t;
      }
    }
  }
  return d;
}

Int det(const IntMatrix& m) { return det(to_rat(m)).get_num(); }

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return rref(w).size();
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = hstack(m, RatMatrix::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
  return aug.block(0, n, n, n);
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix w = m;
  auto piv = rref(w);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  RatMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -w(r, free[k]);
  }
  return basis;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve shape mismatch");
  RatMatrix aug = hstack(a, b);
  auto piv = rref(aug);
  std::size_t nvar = a.cols();
  std::size_t k = 0;
  while (k < piv.size() && piv[k] < nvar) ++k;
  if (k < piv.size()) throw SingularMatrix("inconsistent system");
  if (k != nvar) throw SingularMatrix("solution is not unique");
  return aug.block(0, nvar, nvar, b.cols());
}

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) throw NotSymmetric();
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (sgn(det(m.block(0, 0, k, k))) <= 0) return false;
  return true;
}

bool is_negative_definite(const RatMatrix& m) { return is_positive_definite(-m); }

IntMatrix primitive(const RatMatrix& m) {
  Int l = 1;
  for (const auto& x : m.data()) l = lcm(l, Int(x.get_den()));
  Int g = 0;
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
      g = gcd(g, r(i, j));
    }
  if (g > 1)
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) /= g;
  return r;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += k * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}
void neg_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}
void neg_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix U = IntMatrix::identity(m.rows());
  IntMatrix V = IntMatrix::identity(m.cols());
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j)
          if (sgn(a(i, j)) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i, bj = j, found = true;
          }
      if (!found) return {U, a, V};
      swap_rows(a, t, bi), swap_rows(U, t, bi);
      swap_cols(a, t, bj), swap_cols(V, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Int q = a(i, t) / a(t, t);
        add_row(a, i, t, -q), add_row(U, i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Int q = a(t, j) / a(t, t);
        add_col(a, j, t, -q), add_col(V, j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = 0;
      for (std::size_t i = t + 1; i < a.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad) {
        add_row(a, t, bad, 1), add_row(U, t, bad, 1);
        continue;
      }
      break;
    }
    if (sgn(a(t, t)) < 0) neg_row(a, t), neg_row(U, t);
  }
  return {U, a, V};
}

SkewNormalForm skew_normal_form(const IntMatrix& phi) {
  if (!phi.square() || phi.rows() % 2) throw NotSkew("skew form must be 2n x 2n");
  if (!is_skew(to_rat(phi))) throw NotSkew();
  const std::size_t N = phi.rows(), n = N / 2;
  IntMatrix a = phi;
  IntMatrix U = IntMatrix::identity(N);
  // basis change e_dst += k e_src, applied by congruence
  auto add_basis = [&](std::size_t dst, std::size_t src, const Int& k) {
    add_col(a, dst, src, k);
    add_row(a, dst, src, k);
    add_col(U, dst, src, k);
  };
  auto swap_basis = [&](std::size_t x, std::size_t y) {
    swap_cols(a, x, y), swap_rows(a, x, y), swap_cols(U, x, y);
  };
  std::vector<Int> deltas;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t p = 2 * t, q = p + 1;
    for (;;) {
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = p; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
          if (sgn(a(i, j)) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i, bj = j, found = true;
          }
      if (!found) throw Degenerate();
      swap_basis(p, bi);
      if (bj == p) bj = bi;
      swap_basis(q, bj);
      const Int d = a(p, q);
      bool clean = true;
      for (std::size_t k = q + 1; k < N; ++k) {
        if (sgn(a(p, k)) != 0) {
          Int m = a(p, k) / d;
          add_basis(k, q, -m);
          if (sgn(a(p, k)) != 0) clean = false;
        }
        if (sgn(a(q, k)) != 0) {
          Int m = a(q, k) / d;
          add_basis(k, p, m);
          if (sgn(a(q, k)) != 0) clean = false;
        }
      }
      if (!clean) continue;
      std::size_t bad = 0;
      for (std::size_t i = q + 1; i < N && !bad; ++i)
        for (std::size_t j = q + 1; j < N; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), d.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad) {
        add_basis(p, bad, 1);
        continue;
      }
      break;
    }
    if (sgn(a(p, q)) < 0) {
      neg_col(a, q), neg_row(a, q), neg_col(U, q);
    }
    deltas.push_back(a(p, q));
  }
  IntMatrix P(N, N);
  for (std::size_t t = 0; t < n; ++t) {
    P(2 * t, t) = 1;
    P(2 * t + 1, n + t) = 1;
  }
  IntMatrix W(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) W(i, j) += U(i, k) * P(k, j);
  return {W, deltas};
}

IntMatrix hermite_rows(const IntMatrix& m0) {
  IntMatrix m = m0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (sgn(m(i, c)) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == m.rows()) break;
      swap_rows(m, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (sgn(m(i, c)) == 0) continue;
        Int q = m(i, c) / m(r, c);
        add_row(m, i, r, -q);
        if (sgn(m(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m(r, c)) == 0) continue;
    if (sgn(m(r, c)) < 0) neg_row(m, r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (sgn(q) != 0) add_row(m, i, r, -q);
    }
    ++r;
  }
  return m.block(0, 0, r, m.cols());
}

IntMatrix saturate_rows(const RatMatrix& m) {
  RatMatrix w = m;
  auto piv = rref(w);
  const std::size_t r = piv.size();
  if (r == 0) return IntMatrix(0, m.cols());
  IntMatrix B(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) B.set_block(i, 0, primitive(w.row(i)));
  SmithForm s = smith_normal_form(B);
  IntMatrix Vinv = to_int(invert(to_rat(s.V)));
  return hermite_rows(Vinv.block(0, 0, r, m.cols()));
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  Rat nb = b.norm();
  if (sgn(nb) == 0) throw SingularMatrix("division by zero");
  GaussRat p = a * b.conj();
  return {p.re / nb, p.im / nb};
}

GaussRatMatrix invert(const GaussRatMatrix& m) {
  const std::size_t n = m.re.rows();
  RatMatrix R = block2(m.re, -m.im, m.im, m.re);
  RatMatrix Ri = invert(R);
  return {Ri.block(0, 0, n, n), Ri.block(n, 0, n, n)};
}

void SparseEchelon::reduce(Vec& v) const {
  auto it = v.begin();
  Rat t;
  while (it != v.end()) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rat f = it->second;
    for (const auto& [c, x] : rit->second) {
      t = f * x;
      auto [jt, fresh] = v.try_emplace(c, 0);
      jt->second -= t;
      if (sgn(jt->second) == 0) v.erase(jt);
    }
    it = v.upper_bound(col);
  }
}

bool SparseEchelon::contains(Vec v) const {
  reduce(v);
  return v.empty();
}

bool SparseEchelon::insert(Vec v) {
  reduce(v);
  if (v.empty()) return false;
  const std::size_t piv = v.begin()->first;
  Rat inv = 1 / v.begin()->second;
  std::vector<std::pair<std::size_t, Rat>> row;
  row.reserve(v.size());
  for (auto& [c, x] : v) row.emplace_back(c, x * inv);
  rows_.emplace(piv, std::move(row));
  return true;
}

std::optional<std::size_t> SparseEchelon::leading(const Vec& v) const {
  if (v.empty()) return std::nullopt;
  return v.begin()->first;
}

std::optional<std::vector<Rat>> SparseEchelon::back_substitute() const {
  const std::size_t nvar = dim_ - 1;
  if (rows_.count(nvar)) return std::nullopt;
  std::vector<Rat> x(nvar);
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Rat val = 0;
    for (const auto& [c, a] : it->second) {
      if (c == it->first) continue;
      if (c == nvar)
        val += a;
      else
        val -= a * x[c];
    }
    x[it->first] = val;
  }
  return x;
}

std::vector<std::vector<Rat>> SparseEchelon::kernel() const {
  std::vector<std::vector<Rat>> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (rows_.count(f)) continue;
    std::vector<Rat> x(dim_);
    x[f] = 1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Rat val = 0;
      for (const auto& [c, a] : it->second)
        if (c != it->first && sgn(x[c]) != 0) val -= a * x[c];
      x[it->first] = val;
    }
    out.push_back(std::move(x));
  }
  return out;
}

SparseEchelon::Vec SparseEchelon::from_dense(const RatMatrix& m) {
  Vec v;
  for (std::size_t k = 0; k < m.data().size(); ++k)
    if (sgn(m.data()[k]) != 0) v.emplace(k, m.data()[k]);
  return v;
}

RatMatrix SparseEchelon::to_dense(const Vec& v, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (const auto& [k, x] : v) m(k / cols, k % cols) = x;
  return m;
}

}  // namespace tmirror
