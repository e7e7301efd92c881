#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tmirror/mirror.hpp"
#include "tmirror/sample.hpp"
#include "tmirror/siegel.hpp"

using namespace tmirror;
using tmirror::testing::square_pair;
using tmirror::testing::square_torus;
using tmirror::testing::std_phi;

namespace {

// Gamma_1 = <e_1, e*_2>, Gamma_1 complement <e*_1, e_2>.
IsotropicSplitting square_split() {
  IntMatrix b1(4, 2), b2(4, 2);
  b1(0, 0) = 1;
  b1(3, 1) = 1;
  b2(2, 0) = 1;
  b2(1, 1) = 1;
  return {b1, b2};
}

IntMatrix swap_e2(const std::vector<int>& signs) {
  IntMatrix a(4, 4);
  a(0, 0) = signs[0];
  a(3, 1) = signs[1];
  a(2, 2) = signs[2];
  a(1, 3) = signs[3];
  return a;
}

void expect_valid(const MirrorCertificate& c) {
  EXPECT_NO_THROW(verify_mirror(c.pairA, c.pairB, c.alpha));
  RatMatrix IB = i_omega(c.pairB);
  EXPECT_EQ(IB * jprod(c.pairB.torus), jprod(c.pairB.torus) * IB);
  EXPECT_TRUE(preserves_q(IB, c.pairB.torus.n));
}

}  // namespace

TEST(Mirror, SquareTorusSelfMirror) {
  WeakPair p = square_pair();
  int found = 0;
  for (int s = 0; s < 16; ++s) {
    std::vector<int> signs{s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1, s & 8 ? -1 : 1};
    try {
      verify_mirror(p, p, swap_e2(signs));
      ++found;
    } catch (const DomainError&) {
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_NO_THROW(verify_mirror(p, p, swap_e2({1, -1, 1, -1})));
}

TEST(Mirror, IdentityIsNotAMirror) {
  WeakPair p = square_pair();
  EXPECT_THROW(verify_mirror(p, p, IntMatrix::identity(4)), IntertwineFailure);
  IntMatrix bad = IntMatrix::identity(4);
  bad(0, 1) = 1;
  EXPECT_THROW(verify_mirror(p, p, bad), FormMismatch);
}

TEST(Mirror, FromSplittingOnSquareTorus) {
  WeakPair p = square_pair();
  MirrorResult r = mirror_from_splitting(p, square_split());
  expect_valid(r.cert);
  EXPECT_EQ(r.pair.torus.n, 1);
  EXPECT_NE(classify_pair(r.pair), PairClass::WeakOnly);
  EXPECT_THROW(mirror_from_splitting(p, standard_splitting(1)), NotInvariant);
}

TEST(Mirror, WellBecomingExamples) {
  WeakPair p = square_pair();
  WellBecomingWitness w{IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}}};
  EXPECT_TRUE(check_well_becoming(p, w));
  EXPECT_THROW(check_well_becoming(p, {IntMatrix{{1}, {0}}, IntMatrix{{1}, {0}}}), NotABasis);

  RatMatrix J0 = square_torus().J;
  Torus A = make_torus(2, block_diag(J0, J0));
  RatMatrix phi = block2(RatMatrix(2, 2), RatMatrix::identity(2), -RatMatrix::identity(2), RatMatrix(2, 2));
  WeakPair q = make_weak_pair(A, RatMatrix(4, 4), phi);
  IntMatrix g1(4, 2), g2(4, 2);
  g1(0, 0) = g1(1, 1) = g2(2, 0) = g2(3, 1) = 1;
  EXPECT_FALSE(check_well_becoming(q, {g1, g2}));
}

TEST(Mirror, GMirrorAgreesWithSplittingMirror) {
  WeakPair p = square_pair();
  WellBecomingWitness w{IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}}};
  GMirrorResult g = g_mirror(p, w);
  MirrorResult s = mirror_from_splitting(p, sigma_splitting(w));
  EXPECT_EQ(g.pair, s.pair);
  EXPECT_EQ(g.cert.alpha, s.cert.alpha);
  expect_valid(g.cert);
  EXPECT_TRUE(check_well_becoming(g.pair, g.witness));
}

TEST(Mirror, GMirrorTwiceReturnsIsomorphicPair) {
  Rng rng(19);
  for (int t = 0; t < 12; ++t) {
    SampledPair sp = random_well_becoming(1 + t % 3, rng);
    GMirrorResult b = g_mirror(sp.pair, sp.witness);
    GMirrorResult c = g_mirror(b.pair, b.witness);
    RatMatrix gamma = to_rat(c.cert.alpha) * to_rat(b.cert.alpha);
    const WeakPair &A = sp.pair, &C = c.pair;
    EXPECT_TRUE(preserves_q(gamma, A.torus.n));
    EXPECT_EQ(gamma * jprod(A.torus), jprod(C.torus) * gamma);
    EXPECT_EQ(gamma * i_omega(A), i_omega(C) * gamma);
    EXPECT_TRUE(is_unimodular(to_int(gamma)));
  }
}

TEST(Mirror, AlgebraicityPropagates) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    SampledPair sp = random_well_becoming(1 + t % 3, rng);
    GMirrorResult b = g_mirror(sp.pair, sp.witness);
    expect_valid(b.cert);
    PairClass a = classify_pair(sp.pair);
    if (a != PairClass::WeakOnly) EXPECT_EQ(classify_pair(b.pair), a);
  }
}

TEST(Mirror, InducedBetaParityAndIntertwining) {
  Rng rng(29);
  for (int t = 0; t < 9; ++t) {
    int n = 1 + t % 3;
    SampledPair sp = random_well_becoming(n, rng);
    GMirrorResult b = g_mirror(sp.pair, sp.witness);
    RatMatrix beta = induced_beta(b.cert);
    for (std::size_t k = 0; k < 4u * n; ++k) {
      std::vector<Int> e(4 * n);
      e[k] = 1;
      std::vector<Int> ae(4 * n);
      for (std::size_t i = 0; i < 4u * n; ++i) ae[i] = b.cert.alpha(i, k);
      EXPECT_EQ(beta * cor_matrix(n, e), cor_matrix(n, ae) * beta);
    }
    bool odd = is_odd_op(beta);
    EXPECT_EQ(odd, n % 2 == 1);
  }
}

TEST(Mirror, EllipticCurveMirror) {
  Torus A = square_torus();
  IntMatrix phi{{0, 1}, {-1, 0}};
  EllipticMirror m = elliptic_mirror(A, GaussRat(0, 1), phi);
  expect_valid(m.cert);
  const RatMatrix& JB = m.pairB.torus.J;
  EXPECT_TRUE(JB == A.J || JB == -A.J);
  EXPECT_THROW(elliptic_mirror(A, GaussRat(0, 1), IntMatrix(2, 2)), DomainError);
}

TEST(Mirror, EllipticProductWithIsogeny) {
  RatMatrix X{{1, 0}, {0, 1}}, Y{{0, 1}, {1, 0}};
  EllipticInput in = elliptic_input({Int(1), Int(2)}, X, Y, IntMatrix::identity(4), GaussRat(1, 1));
  EllipticMirror m = elliptic_mirror(in.A, in.tau, in.phi);
  expect_valid(m.cert);
  EXPECT_EQ(m.deltas[1], 2);
  EXPECT_EQ(m.isogenies[1], (IntMatrix{{1, 0}, {0, 2}}));
  const RatMatrix& JB = m.pairB.torus.J;
  EXPECT_TRUE(JB.block(0, 2, 2, 2).is_zero());
  EXPECT_TRUE(JB.block(2, 0, 2, 2).is_zero());
  Torus E1 = elliptic_factor(m.pairB, 0), E2 = elliptic_factor(m.pairB, 1);
  EXPECT_TRUE(is_hom(E1, E2, to_rat(m.isogenies[1])));
}

TEST(Mirror, CompareIsos) {
  WeakPair p = square_pair();
  MirrorResult r = mirror_from_splitting(p, square_split());
  EXPECT_EQ(compare_mirror_isos(r.cert, r.cert), IntMatrix::identity(4));

  RatMatrix k = i_omega(p);
  ASSERT_TRUE(u_membership(k, p.torus));
  MirrorCertificate c2 = verify_mirror(p, r.pair, to_int(to_rat(r.cert.alpha) * invert(k)));
  EXPECT_EQ(compare_mirror_isos(r.cert, c2), to_int(k));

  // Move the target by an NS translation of B.
  auto ns = ns_basis(r.pair.torus);
  RatMatrix h = translation(ns[0].c);
  WeakPair B2 = siegel_act(h, r.pair);
  MirrorCertificate c3 = verify_mirror(p, B2, to_int(h * to_rat(r.cert.alpha)));
  IntMatrix g = compare_mirror_isos(r.cert, c3);
  EXPECT_EQ(to_rat(g), h);
  EXPECT_TRUE(u_membership(to_rat(g), r.pair.torus));
  EXPECT_EQ(siegel_act(to_rat(g), r.pair), B2);

  MirrorCertificate other{r.cert.alpha, B2, r.pair};
  EXPECT_THROW(compare_mirror_isos(r.cert, other), DifferentSource);
}
