#include "tmirror/mirror.hpp"

#include "tmirror/siegel.hpp"

namespace tmirror {

MirrorCertificate verify_mirror(const WeakPair& pA, const WeakPair& pB, const IntMatrix& alpha) {
  const int n = pA.torus.n;
  const std::size_t L = 4 * static_cast<std::size_t>(n);
  if (pB.torus.n != n || alpha.rows() != L || alpha.cols() != L) throw ShapeError("certificate shapes differ");
  if (!is_unimodular(alpha)) throw NotInvertible("alpha is not unimodular");
  RatMatrix a = to_rat(alpha);
  RatMatrix Q = to_rat(q_form(n));
  if (a.transpose() * Q * a != Q) throw FormMismatch("alpha^T Q_B alpha != Q_A");
  if (a * jprod(pA.torus) != i_omega(pB) * a) throw IntertwineFailure("alpha Jprod_A != I_omega_B alpha");
  if (a * i_omega(pA) != jprod(pB.torus) * a) throw IntertwineFailure("alpha I_omega_A != Jprod_B alpha");
  return {alpha, pA, pB};
}

namespace {

bool invariant_span(const RatMatrix& I, const RatMatrix& b) {
  return rank(hstack(b, I * b)) == rank(b);
}

}  // namespace

MirrorResult mirror_from_splitting(const WeakPair& p, const IsotropicSplitting& s) {
  validate_splitting(s);
  const int n = p.torus.n;
  const std::size_t g = 2 * static_cast<std::size_t>(n);
  if (s.basis1.rows() != 2 * g) throw ShapeError("splitting does not live on Lambda_A");
  RatMatrix b = to_rat(s.basis1), c = to_rat(s.basis2);
  RatMatrix I = i_omega(p);
  if (!invariant_span(I, b) || !invariant_span(I, c)) throw NotInvariant("splitting is not I_omega-invariant");
  RatMatrix G = b.transpose() * to_rat(q_form(n)) * c;
  RatMatrix cdual = c * invert(G);
  RatMatrix P = hstack(b, cdual);
  RatMatrix alpha = invert(P);
  RatMatrix M = alpha * I * P;
  Torus B = make_torus(n, M.block(0, 0, g, g));
  WeakPair pB = recover_omega(B, alpha * jprod(p.torus) * P);
  MirrorCertificate cert = verify_mirror(p, pB, to_int(alpha));
  return {pB, cert};
}

bool check_well_becoming(const WeakPair& p, const WellBecomingWitness& w) {
  const std::size_t n = static_cast<std::size_t>(p.torus.n), g = 2 * n;
  if (w.gamma1.rows() != g || w.gamma2.rows() != g || w.gamma1.cols() != n || w.gamma2.cols() != n)
    throw ShapeError("witness bases have the wrong shape");
  IntMatrix Pi(g, g);
  Pi.set_block(0, 0, w.gamma1);
  Pi.set_block(0, n, w.gamma2);
  if (!is_unimodular(Pi)) throw NotABasis("Gamma_1 + Gamma_2 is not a basis of Gamma");
  for (const IntMatrix* gk : {&w.gamma1, &w.gamma2}) {
    RatMatrix v = to_rat(*gk);
    if (!(v.transpose() * p.phi1 * v).is_zero() || !(v.transpose() * p.phi2 * v).is_zero()) return false;
  }
  RatMatrix P = to_rat(Pi);
  RatMatrix Jw = invert(P) * p.torus.J * P;
  return sgn(det(Jw.block(0, n, n, n))) != 0 && sgn(det(Jw.block(n, 0, n, n))) != 0;
}

IsotropicSplitting sigma_splitting(const WellBecomingWitness& w) {
  const std::size_t n = w.gamma1.cols(), g = 2 * n;
  IntMatrix Pi(g, g);
  Pi.set_block(0, 0, w.gamma1);
  Pi.set_block(0, n, w.gamma2);
  IntMatrix R = to_int(invert(to_rat(Pi)));
  IntMatrix b1(2 * g, g), b2(2 * g, g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < g; ++k) {
      b1(g + k, i) = R(i, k);
      b1(k, n + i) = w.gamma2(k, i);
      b2(k, i) = w.gamma1(k, i);
      b2(g + k, n + i) = R(n + i, k);
    }
  return {b1, b2};
}

WellBecomingWitness induced_witness(int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  IntMatrix g1(2 * m, m), g2(2 * m, m);
  for (std::size_t i = 0; i < m; ++i) {
    g1(i, i) = 1;
    g2(m + i, i) = 1;
  }
  return {g1, g2};
}

GMirrorResult g_mirror(const WeakPair& p, const WellBecomingWitness& w) {
  if (!check_well_becoming(p, w)) throw NotWellBecoming();
  MirrorResult r = mirror_from_splitting(p, sigma_splitting(w));
  WellBecomingWitness wB = induced_witness(p.torus.n);
  if (!check_well_becoming(r.pair, wB)) throw NotWellBecoming("mirror pair fails the induced witness");
  return {r.pair, r.cert, wB};
}

Torus elliptic_factor(const WeakPair& pB, int i) {
  return make_torus(1, pB.torus.J.block(2 * i, 2 * i, 2, 2));
}

namespace {

IsotropicSplitting elliptic_splitting(const IntMatrix& U) {
  const std::size_t g = U.rows(), n = g / 2;
  IntMatrix R = to_int(invert(to_rat(U)));
  IntMatrix b1(2 * g, g), b2(2 * g, g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < g; ++k) {
      b1(k, 2 * i) = U(k, i);
      b1(g + k, 2 * i + 1) = R(n + i, k);
      b2(g + k, 2 * i) = R(i, k);
      b2(k, 2 * i + 1) = U(k, n + i);
    }
  return {b1, b2};
}

}  // namespace

EllipticMirror elliptic_mirror(const Torus& A, const GaussRat& tau, const IntMatrix& phi, int budget) {
  if (sgn(tau.im) == 0) throw Degenerate("tau must have nonzero imaginary part");
  const std::size_t n = static_cast<std::size_t>(A.n);
  RatMatrix f = to_rat(phi);
  WeakPair p = make_weak_pair(A, f * tau.re, f * tau.im);
  SkewNormalForm snf = skew_normal_form(phi.transpose());
  const auto& d = snf.deltas;

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);

  std::optional<MirrorResult> found;
  auto attempt = [&](const std::vector<int>& m) {
    IntMatrix T = IntMatrix::identity(2 * n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      const Int& dm = d[j];
      T(i, n + j) = m[k] * (dm / d[i]);
      T(j, n + i) = m[k] * (dm / d[j]);
    }
    try {
      found = mirror_from_splitting(p, elliptic_splitting(to_int(to_rat(snf.basisChange) * to_rat(T))));
      return true;
    } catch (const Block12Singular&) {
      return false;
    }
  };
  if (!attempt(std::vector<int>(slots.size())))
    enumerate_by_max_norm(slots.size(), budget, attempt);
  if (!found) throw TransversalityNotFound("no transvection within the budget makes the splitting transversal");

  EllipticMirror out{p, found->pair, found->cert, d, {}};
  for (std::size_t i = 0; i < n; ++i) out.isogenies.push_back(IntMatrix{{1, 0}, {0, d[i] / d[0]}});
  return out;
}

IntMatrix compare_mirror_isos(const MirrorCertificate& c1, const MirrorCertificate& c2) {
  if (!(c1.pairA == c2.pairA)) throw DifferentSource();
  const RatMatrix a1 = to_rat(c1.alpha), a2 = to_rat(c2.alpha);
  if (c1.pairB == c2.pairB) {
    RatMatrix gamma = invert(a2) * a1;
    if (!u_membership(gamma, c1.pairA.torus)) throw IntertwineFailure("alpha2^{-1} alpha1 is not in U(A)");
    if (!i_omega_centralizer_check(gamma, c1.pairA)) throw IntertwineFailure("alpha2^{-1} alpha1 moves I_omega");
    return to_int(gamma);
  }
  RatMatrix g = a2 * invert(a1);
  const WeakPair &B1 = c1.pairB, &B2 = c2.pairB;
  if (!preserves_q(g, B1.torus.n) || g * jprod(B1.torus) != jprod(B2.torus) * g)
    throw IntertwineFailure("alpha2 alpha1^{-1} is not an isomorphism of the targets");
  if (g * i_omega(B1) != i_omega(B2) * g) throw IntertwineFailure("alpha2 alpha1^{-1} does not carry omega1 to omega2");
  return to_int(g);
}

IsotropicSplitting target_splitting(const IntMatrix& alpha) {
  const std::size_t g = alpha.rows() / 2;
  IntMatrix inv = to_int(invert(to_rat(alpha)));
  return {inv.block(0, 0, 2 * g, g), inv.block(0, g, 2 * g, g)};
}

RatMatrix induced_beta(const MirrorCertificate& c) {
  return beta_iso(standard_splitting(c.pairA.torus.n), target_splitting(c.alpha));
}

}  // namespace tmirror
