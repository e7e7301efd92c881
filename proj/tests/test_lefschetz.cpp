#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tmirror/clifford.hpp"
#include "tmirror/lefschetz.hpp"
#include "tmirror/sample.hpp"

using namespace tmirror;
using tmirror::testing::square_torus;
using tmirror::testing::std_phi;

namespace {

Torus square_power(int n) {
  RatMatrix J(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = -1;
    J(n + i, i) = 1;
  }
  return make_torus(n, J);
}

}  // namespace

TEST(Lefschetz, EOnEllipticCurve) {
  RatMatrix e = lefschetz_e({std_phi()}).mat;
  RatMatrix expect(4, 4);
  expect(3, 0) = 1;
  EXPECT_EQ(e, expect);
  EXPECT_EQ(rank(e), 1u);
  EXPECT_TRUE((e * e).is_zero());
  RatMatrix a = std_phi();
  EXPECT_EQ(lefschetz_e({a * Rat(2) + a}).mat, e * Rat(3));
}

TEST(Lefschetz, FOnEllipticCurve) {
  GradedOperator f = lefschetz_f({std_phi()});
  RatMatrix e = lefschetz_e({std_phi()}).mat;
  RatMatrix h(4, 4);
  h(0, 0) = -1;
  h(3, 3) = 1;
  EXPECT_EQ(lefschetz_h(1).mat, h);
  EXPECT_EQ(commutator(e, f.mat), h);
  EXPECT_EQ(f.degree, -2);
  EXPECT_THROW(lefschetz_f({RatMatrix(2, 2)}), NoHardLefschetz);
}

TEST(Lefschetz, Sl2RelationsOnSamples) {
  Rng rng(5);
  int done = 0;
  while (done < 20) {
    int n = 1 + done % 2;
    Torus A = square_power(n);
    auto basis = ns_basis(A);
    RatMatrix c(2 * n, 2 * n);
    for (const auto& b : basis) c += b.c * Rat(uniform(rng, -2, 2));
    NSVector k{c};
    RatMatrix e = lefschetz_e(k).mat;
    if (!hard_lefschetz(e, n)) continue;
    ++done;
    RatMatrix f = lefschetz_f(k).mat, h = lefschetz_h(n).mat;
    EXPECT_EQ(commutator(e, f), h);
    EXPECT_EQ(commutator(h, e), e * Rat(2));
    EXPECT_EQ(commutator(h, f), f * Rat(-2));
    EXPECT_EQ(lefschetz_f_nullity(k), 0u);
  }
}

TEST(Lefschetz, EllipticCurveGivesSl2) {
  LieAlgebraBasis L = generate_g_ns(square_torus(), {{std_phi()}});
  EXPECT_EQ(L.dim, 3u);
  EXPECT_TRUE(bracket_closed(L));
  LieAlgebraBasis D = generate_g_ns(square_torus(), {{std_phi()}, {std_phi()}});
  EXPECT_EQ(D.dim, 3u);
}

TEST(Lefschetz, ChiSigns) {
  RatMatrix G = chi_form(1);
  EXPECT_EQ(G(0, 3), -1);
  for (int n = 1; n <= 2; ++n) {
    RatMatrix C = chi_form(n);
    for (unsigned a = 0; a < spin_dim(n); ++a)
      for (unsigned b = 0; b < spin_dim(n); ++b)
        if (popcount(a) + popcount(b) != 2 * n) EXPECT_EQ(C(a, b), 0);
  }
}

TEST(Lefschetz, SoImage) {
  for (int n = 1; n <= 2; ++n) {
    LieAlgebraBasis S = so_lambda_spinor_image(square_power(n));
    EXPECT_EQ(S.dim, static_cast<std::size_t>(2 * n * (4 * n - 1)));
    RatMatrix h(spin_dim(n), spin_dim(n));
    for (int i = 0; i < 2 * n; ++i) {
      std::vector<Int> e(4 * n), x(4 * n);
      e[i] = 1;
      x[2 * n + i] = 1;
      h += commutator(cor_matrix(n, x), cor_matrix(n, e)) * Rat(1, 2);
    }
    EXPECT_EQ(h, lefschetz_h(n).mat);
    EXPECT_TRUE(in_span(S, h));
  }
}

TEST(Lefschetz, GnsInsideSoAndPreservesChi) {
  for (int n = 1; n <= 2; ++n) {
    Torus A = square_power(n);
    LieAlgebraBasis L = generate_g_ns(A, default_kappas(A, 1, 6));
    LieAlgebraBasis S = so_lambda_spinor_image(A);
    EXPECT_TRUE(bracket_closed(L));
    for (const auto& op : L.ops) {
      EXPECT_TRUE(in_span(S, op.mat));
      EXPECT_TRUE(preserves_chi(op.mat, n));
      EXPECT_EQ(op.degree % 2, 0);
      EXPECT_EQ(commutator(lefschetz_h(n).mat, op.mat), op.mat * Rat(op.degree));
    }
  }
}
