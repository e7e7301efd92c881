#include <gtest/gtest.h>

#include <random>

#include "tmirror/exactlin.hpp"

using namespace tmirror;

namespace {

IntMatrix random_int(std::size_t r, std::size_t c, std::mt19937_64& rng, int b) {
  std::uniform_int_distribution<int> d(-b, b);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Rat cofactor_det(const RatMatrix& m) {
  if (m.rows() == 1) return m(0, 0);
  Rat s = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    RatMatrix minor(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 1; i < m.rows(); ++i)
      for (std::size_t k = 0, c = 0; k < m.cols(); ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Rat t = m(0, j) * cofactor_det(minor);
    s += j % 2 ? Rat(-t) : t;
  }
  return s;
}

}  // namespace

TEST(ExactLin, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    RatMatrix m = to_rat(random_int(4, 4, rng, 3));
    m(1, 2) = Rat(1, 3);
    EXPECT_EQ(det(m), cofactor_det(m));
  }
}

TEST(ExactLin, InverseIsTwoSided) {
  RatMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  RatMatrix i = invert(m);
  EXPECT_EQ(m * i, RatMatrix::identity(3));
  EXPECT_EQ(i * m, RatMatrix::identity(3));
  EXPECT_THROW(invert(RatMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST(ExactLin, NullspaceAndRank) {
  RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  RatMatrix K = nullspace(m);
  EXPECT_EQ(K.cols(), 1u);
  EXPECT_TRUE((m * K).is_zero());
  EXPECT_EQ(rank(m), 2u);
}

TEST(ExactLin, SolveSystem) {
  RatMatrix a{{1, 1}, {1, -1}};
  RatMatrix b{{3}, {1}};
  EXPECT_EQ(solve(a, b), (RatMatrix{{2}, {1}}));
}

TEST(ExactLin, DefinitenessBySylvester) {
  EXPECT_TRUE(is_positive_definite(RatMatrix{{2, 1}, {1, 2}}));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  EXPECT_TRUE(is_negative_definite(RatMatrix{{-2, 1}, {1, -2}}));
  EXPECT_THROW(is_positive_definite(RatMatrix{{1, 2}, {0, 1}}), NotSymmetric);
}

TEST(ExactLin, SmithFormDiagonalDivisibilityAndUnimodular) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    IntMatrix m = random_int(3, 4, rng, 6);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i + 1 < 3; ++i) {
      const Int &a = s.D(i, i), &b = s.D(i + 1, i + 1);
      EXPECT_GE(a, 0);
      if (sgn(a) != 0) EXPECT_TRUE(mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()));
      else EXPECT_EQ(b, 0);
    }
  }
}

TEST(ExactLin, SmithFormOfKnownMatrix) {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.D(0, 0), 2);
  EXPECT_EQ(s.D(1, 1), 6);
  EXPECT_EQ(s.D(2, 2), 12);
}

TEST(ExactLin, SkewNormalFormCongruence) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 20) {
    IntMatrix a = random_int(4, 4, rng, 4);
    IntMatrix phi = a - a.transpose();
    if (det(phi) == 0) continue;
    ++done;
    SkewNormalForm s = skew_normal_form(phi);
    EXPECT_TRUE(is_unimodular(s.basisChange));
    IntMatrix N = s.basisChange.transpose() * phi * s.basisChange;
    ASSERT_EQ(s.deltas.size(), 2u);
    IntMatrix expect(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      expect(i, 2 + i) = s.deltas[i];
      expect(2 + i, i) = -s.deltas[i];
    }
    EXPECT_EQ(N, expect);
    EXPECT_TRUE(mpz_divisible_p(s.deltas[1].get_mpz_t(), s.deltas[0].get_mpz_t()));
    Int pf = s.deltas[0] * s.deltas[1];
    EXPECT_EQ(pf * pf, det(phi));
  }
  EXPECT_THROW(skew_normal_form(IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}), Degenerate);
}

TEST(ExactLin, SaturationFindsPrimitiveSublattice) {
  IntMatrix s = saturate_rows(RatMatrix{{2, 4, 0}, {0, 0, 3}});
  EXPECT_EQ(s.rows(), 2u);
  EXPECT_EQ(hermite_rows(s), hermite_rows(IntMatrix{{1, 2, 0}, {0, 0, 1}}));
}

TEST(ExactLin, GaussianInverse) {
  GaussRatMatrix m(RatMatrix{{1, 2}, {0, 1}}, RatMatrix{{1, 0}, {3, 0}});
  GaussRatMatrix prod = m * invert(m);
  EXPECT_EQ(prod.re, RatMatrix::identity(2));
  EXPECT_TRUE(prod.im.is_zero());
  EXPECT_EQ(GaussRat(1, 1) / GaussRat(1, -1), GaussRat(0, 1));
}

TEST(ExactLin, SparseEchelonSolvesAndSpans) {
  SparseEchelon E(3);
  EXPECT_TRUE(E.insert({{0, 1}, {1, 1}, {2, 3}}));
  EXPECT_TRUE(E.insert({{0, 1}, {1, -1}, {2, 1}}));
  EXPECT_FALSE(E.insert({{0, 2}, {2, 4}}));
  auto sol = E.back_substitute();
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], 2);
  EXPECT_EQ((*sol)[1], 1);
}
