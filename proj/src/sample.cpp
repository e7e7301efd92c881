#include "tmirror/sample.hpp"

#include <cstdlib>
#include <string>

#include "tmirror/siegel.hpp"

namespace tmirror {

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("TORUS_MIRROR_SEED");
  if (!s || !*s) return fallback;
  return std::stoull(s);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rat small_rational(Rng& rng, int num_bound, int den_bound) {
  Rat r(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

IntMatrix random_unimodular(std::size_t N, Rng& rng, int steps) {
  IntMatrix m = IntMatrix::identity(N);
  if (N < 2) return m;
  if (steps == 0) steps = static_cast<int>(3 * N);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = uniform(rng, 0, static_cast<int>(N) - 1), j = uniform(rng, 0, static_cast<int>(N) - 2);
    if (j >= i) ++j;
    int k = uniform(rng, -2, 2);
    for (std::size_t c = 0; c < N; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

RatMatrix random_symmetric(std::size_t n, Rng& rng, int bound) {
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) d(i, j) = d(j, i) = uniform(rng, -bound, bound);
  return d;
}

namespace {

RatMatrix poly(const RatMatrix& d, const std::vector<int>& c) {
  RatMatrix r(d.rows(), d.cols()), pw = RatMatrix::identity(d.rows());
  for (int x : c) {
    if (x) r += pw * Rat(x);
    pw = pw * d;
  }
  return r;
}

std::vector<int> random_coeffs(Rng& rng, std::size_t len) {
  std::vector<int> c(len);
  for (auto& x : c) x = uniform(rng, -2, 2);
  return c;
}

RatMatrix off_diag(const RatMatrix& p) {
  const std::size_t n = p.rows();
  return block2(RatMatrix(n, n), p, -p, RatMatrix(n, n));
}

// Complex structure [[q2^-1 q1, -q2^-1], [q2 + q1 q2^-1 q1, -q1 q2^-1]].
RatMatrix g_structure(const RatMatrix& q1, const RatMatrix& q2) {
  RatMatrix inv2 = invert(q2);
  return block2(inv2 * q1, -inv2, q2 + q1 * inv2 * q1, -(q1 * inv2));
}

}  // namespace

SampledPair random_well_becoming(int n, Rng& rng) {
  const std::size_t m = static_cast<std::size_t>(n);
  for (;;) {
    RatMatrix d = random_symmetric(m, rng, 2);
    RatMatrix q1 = poly(d, random_coeffs(rng, 2));
    RatMatrix q2 = poly(d, random_coeffs(rng, 3));
    if (sgn(det(q2)) == 0) continue;
    RatMatrix J = g_structure(q1, q2);
    if (sgn(det(J.block(m, 0, m, m))) == 0) continue;
    RatMatrix p2 = poly(d, random_coeffs(rng, 2));
    if (sgn(det(p2)) == 0) continue;
    RatMatrix phi1 = off_diag(poly(d, random_coeffs(rng, 2))) * small_rational(rng, 3, 2);
    Rat b = small_rational(rng, 3, 2);
    if (sgn(b) == 0) continue;
    RatMatrix phi2 = off_diag(p2) * b;

    IntMatrix U = random_unimodular(2 * m, rng);
    RatMatrix Ur = to_rat(U), Ui = invert(Ur);
    Torus A = make_torus(n, Ur * J * Ui);
    WeakPair p = make_weak_pair(A, Ui.transpose() * phi1 * Ui, Ui.transpose() * phi2 * Ui);
    return {p, {U.block(0, 0, 2 * m, m), U.block(0, m, 2 * m, m)}};
  }
}

WeakPair random_weak_pair_on(const Torus& A, Rng& rng) {
  auto basis = ns_basis(A);
  const std::size_t N = A.J.rows();
  for (;;) {
    RatMatrix f1(N, N), f2(N, N);
    for (const auto& b : basis) {
      f1 += b.c * small_rational(rng, 3, 3);
      f2 += b.c * small_rational(rng, 3, 3);
    }
    if (sgn(det(f2)) != 0) return make_weak_pair(A, f1, f2);
  }
}

WeakPair random_weak_pair(int n, Rng& rng) {
  return random_weak_pair_on(random_well_becoming(n, rng).pair.torus, rng);
}

IsotropicSplitting random_splitting(int n, Rng& rng) {
  const std::size_t g = 2 * static_cast<std::size_t>(n);
  RatMatrix G = RatMatrix::identity(2 * g);
  auto skew = [&] {
    RatMatrix s(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        s(i, j) = uniform(rng, -1, 1);
        s(j, i) = -s(i, j);
      }
    return s;
  };
  int factors = uniform(rng, 1, 4);
  for (int f = 0; f < factors; ++f) {
    RatMatrix h;
    switch (uniform(rng, 0, 3)) {
      case 0: h = translation(skew()); break;
      case 1: h = dual_translation(skew()); break;
      case 2: {
        RatMatrix a = to_rat(random_unimodular(g, rng));
        h = block_diag(a, invert(a).transpose());
        break;
      }
      default: {
        h = RatMatrix::identity(2 * g);
        for (std::size_t i = 0; i < g; ++i)
          if (uniform(rng, 0, 1)) {
            h(i, i) = h(g + i, g + i) = 0;
            h(i, g + i) = h(g + i, i) = 1;
          }
      }
    }
    G = h * G;
  }
  IsotropicSplitting st = standard_splitting(n);
  return {to_int(G * to_rat(st.basis1)), to_int(G * to_rat(st.basis2))};
}

RatMatrix random_spin(int n, Rng& rng) {
  const int g = 2 * n;
  const std::size_t L = 2 * static_cast<std::size_t>(g);
  auto cor_of = [&](std::vector<Int> lam) { return cor_matrix(n, lam); };
  auto unit = [&](std::size_t k) {
    std::vector<Int> e(L);
    e[k] = 1;
    return e;
  };
  RatMatrix z = RatMatrix::identity(spin_dim(n));
  int factors = uniform(rng, 1, 3);
  for (int f = 0; f < factors; ++f) {
    int i = uniform(rng, 0, g - 1), j = uniform(rng, 0, g - 2);
    if (j >= i) ++j;
    Rat k = uniform(rng, -3, 3);
    RatMatrix h;
    switch (uniform(rng, 0, 4)) {
      case 0: h = RatMatrix::identity(spin_dim(n)) + cor_of(unit(g + i)) * cor_of(unit(g + j)) * k; break;
      case 1: h = RatMatrix::identity(spin_dim(n)) + cor_of(unit(i)) * cor_of(unit(j)) * k; break;
      case 2: h = RatMatrix::identity(spin_dim(n)) + cor_of(unit(g + i)) * cor_of(unit(j)) * k; break;
      default: {
        int sign = uniform(rng, 0, 1) ? 1 : -1;
        std::vector<Int> v(L), w(L);
        v[i] = w[j] = 1;
        v[g + i] = w[g + j] = sign;
        h = cor_of(v) * cor_of(w);
      }
    }
    z = z * h;
  }
  return z;
}

RatMatrix random_u_element(const Torus& A, Rng& rng) {
  static const int rot[][3] = {{3, 4, 5}, {4, -3, 5}, {5, 12, 13}, {-12, 5, 13}, {8, 15, 17}, {0, 1, 1}};
  auto basis = ns_basis(A);
  const std::size_t N = A.J.rows();
  RatMatrix u = RatMatrix::identity(2 * N);
  int factors = uniform(rng, 1, 3);
  for (int f = 0; f < factors; ++f) {
    RatMatrix h;
    switch (uniform(rng, 0, 2)) {
      case 0: {
        RatMatrix eta(N, N);
        for (const auto& b : basis) eta += b.c * Rat(uniform(rng, -2, 2));
        h = translation(eta);
        break;
      }
      case 1: {
        RatMatrix phi(N, N);
        while (sgn(det(phi)) == 0) {
          phi = RatMatrix(N, N);
          for (const auto& b : basis) phi += b.c * Rat(uniform(rng, -2, 2));
        }
        h = dual_translation(invert(phi));
        break;
      }
      default: {
        const auto& r = rot[uniform(rng, 0, 5)];
        RatMatrix I = i_omega(random_weak_pair_on(A, rng));
        h = RatMatrix::identity(2 * N) * Rat(r[0], r[2]) + I * Rat(r[1], r[2]);
      }
    }
    u = u * h;
  }
  return u;
}

EllipticInput elliptic_input(const std::vector<Int>& deltas, const RatMatrix& X, const RatMatrix& Y,
                             const IntMatrix& U, const GaussRat& tau) {
  const std::size_t n = deltas.size();
  RatMatrix D = RatMatrix::identity(2 * n), Phi(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    D(n + i, n + i) = deltas[i];
    Phi(i, n + i) = deltas[i];
    Phi(n + i, i) = -deltas[i];
  }
  RatMatrix J0 = invert(D) * g_structure(Y, X) * D;
  RatMatrix Ur = to_rat(U), Ui = invert(Ur);
  Torus A = make_torus(static_cast<int>(n), Ur * J0 * Ui);
  IntMatrix phi = to_int((Ui.transpose() * Phi * Ui).transpose());
  return {A, tau, phi};
}

EllipticInput random_elliptic_input(int n, Rng& rng) {
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<Int> deltas{1};
  for (std::size_t i = 1; i < m; ++i) deltas.push_back(deltas.back() * uniform(rng, 1, 2));
  RatMatrix X;
  do X = random_symmetric(m, rng, 2);
  while (sgn(det(X)) == 0);
  RatMatrix Y = random_symmetric(m, rng, 2);
  GaussRat tau{small_rational(rng, 3, 2), 0};
  while (sgn(tau.im) == 0) tau.im = small_rational(rng, 3, 2);
  return elliptic_input(deltas, X, Y, random_unimodular(2 * m, rng), tau);
}

}  // namespace tmirror
