#include <gtest/gtest.h>

#include "tmirror/clifford.hpp"
#include "tmirror/pairspace.hpp"
#include "tmirror/sample.hpp"
#include "tmirror/siegel.hpp"

using namespace tmirror;

namespace {

std::vector<Int> unit(int n, std::size_t k) {
  std::vector<Int> e(4 * n);
  e[k] = 1;
  return e;
}

Rat q_value(const std::vector<Int>& u, const std::vector<Int>& v) {
  const std::size_t g = u.size() / 2;
  Rat s = 0;
  for (std::size_t i = 0; i < g; ++i) s += u[i] * v[g + i] + u[g + i] * v[i];
  return s;
}

// u -> v u v = Q(u,v) v - (Q(v,v)/2) u inside the Clifford algebra.
IntMatrix sandwich(const std::vector<Int>& v) {
  const std::size_t L = v.size();
  const Int half = Rat(q_value(v, v) / 2).get_num();
  IntMatrix r(L, L);
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Int> e(L);
    e[k] = 1;
    const Int q = q_value(e, v).get_num();
    for (std::size_t i = 0; i < L; ++i) r(i, k) = q * v[i] - half * e[i];
  }
  return r;
}

IsotropicSplitting moved(const RatMatrix& g, const IsotropicSplitting& s) {
  return {to_int(g * to_rat(s.basis1)), to_int(g * to_rat(s.basis2))};
}

IsotropicSplitting half_swap(int n) {
  IsotropicSplitting s = standard_splitting(n);
  const std::size_t g = 2 * n;
  for (std::size_t i = n; i < g; ++i) {
    for (std::size_t r = 0; r < 2 * g; ++r) std::swap(s.basis1(r, i), s.basis2(r, i));
  }
  return s;
}

}  // namespace

TEST(Clifford, CorActionExamples) {
  SpinVec x1{1, {{1u, 1}}}, x2{1, {{2u, 1}}};
  EXPECT_EQ(cor_action(unit(1, 0), x1), (SpinVec{1, {{0u, 1}}}));
  EXPECT_EQ(cor_action(unit(1, 2), x2), (SpinVec{1, {{3u, 1}}}));
  EXPECT_EQ(cor_action(unit(1, 3), x1), (SpinVec{1, {{3u, -1}}}));
}

TEST(Clifford, CliffordRelations) {
  for (int n = 1; n <= 2; ++n) {
    const std::size_t L = 4 * n;
    const RatMatrix Id = RatMatrix::identity(spin_dim(n));
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) {
        RatMatrix A = cor_matrix(n, unit(n, a)), B = cor_matrix(n, unit(n, b));
        EXPECT_EQ(A * B + B * A, Id * q_value(unit(n, a), unit(n, b)));
      }
  }
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 2;
    std::vector<Int> v(4 * n);
    for (auto& x : v) x = uniform(rng, -3, 3);
    RatMatrix C = cor_matrix(n, v);
    EXPECT_EQ(C * C, RatMatrix::identity(spin_dim(n)) * (q_value(v, v) / 2));
  }
}

TEST(Clifford, CorIsFaithful) {
  for (int n = 1; n <= 2; ++n) {
    const std::size_t N = spin_dim(n), L = 4 * n;
    std::vector<RatMatrix> gen;
    for (std::size_t k = 0; k < L; ++k) gen.push_back(cor_matrix(n, unit(n, k)));
    SparseEchelon E(N * N);
    for (unsigned S = 0; S < (1u << L); ++S) {
      RatMatrix m = RatMatrix::identity(N);
      for (std::size_t k = 0; k < L; ++k)
        if (S & (1u << k)) m = m * gen[k];
      E.insert(SparseEchelon::from_dense(m));
    }
    EXPECT_EQ(E.rank(), std::size_t{1} << (4 * n));
  }
}

TEST(Clifford, InvolutionProperties) {
  const int n = 2;
  for (std::size_t a = 0; a < 8; ++a) {
    RatMatrix A = cor_matrix(n, unit(n, a));
    EXPECT_EQ(clifford_involution(A), A);
    for (std::size_t b = 0; b < 8; ++b) {
      RatMatrix B = cor_matrix(n, unit(n, b));
      EXPECT_EQ(clifford_involution(A * B), B * A);
    }
  }
  RatMatrix x1x2 = cor_matrix(1, unit(1, 2)) * cor_matrix(1, unit(1, 3));
  EXPECT_EQ(clifford_involution(x1x2), -x1x2);
  Rng rng(6);
  RatMatrix z = random_spin(2, rng);
  EXPECT_EQ(clifford_involution(clifford_involution(z)), z);
}

TEST(Clifford, SpinMembership) {
  for (int n = 1; n <= 2; ++n) {
    RatMatrix Id = RatMatrix::identity(spin_dim(n));
    EXPECT_TRUE(is_spin(Id));
    EXPECT_TRUE(is_spin(-Id));
    EXPECT_EQ(r_of_z(Id), IntMatrix::identity(4 * n));
    EXPECT_EQ(r_of_z(-Id), IntMatrix::identity(4 * n));
    EXPECT_FALSE(is_spin(Id * Rat(2)));
    RatMatrix z = cor_matrix(n, unit(n, 0)) * cor_matrix(n, unit(n, 2 * n));
    EXPECT_FALSE(is_spin(z));
    EXPECT_THROW(r_of_z(z), NotSpin);
    EXPECT_THROW(is_spin(Id + cor_matrix(n, unit(n, 0))), NotEven);
  }
}

TEST(Clifford, ReflectionPairConjugation) {
  const int n = 2;
  for (int sign : {1, -1})
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        std::vector<Int> v(8), w(8);
        v[i] = w[j] = 1;
        v[4 + i] = w[4 + j] = sign;
        RatMatrix z = cor_matrix(n, v) * cor_matrix(n, w);
        ASSERT_TRUE(is_spin(z));
        EXPECT_EQ(r_of_z(z), sandwich(v) * sandwich(w));
      }
}

TEST(Clifford, SpinHomomorphismOnSamples) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 2;
    RatMatrix z = random_spin(n, rng), w = random_spin(n, rng);
    ASSERT_TRUE(is_spin(z));
    IntMatrix rz = r_of_z(z), rw = r_of_z(w);
    EXPECT_EQ(r_of_z(-z), rz);
    EXPECT_EQ(r_of_z(z * w), rz * rw);
    EXPECT_TRUE(preserves_q(to_rat(rz), n));
    EXPECT_EQ(det(rz), 1);
  }
}

TEST(Clifford, BetaOfEqualSplittingsIsIdentity) {
  for (int n = 1; n <= 2; ++n) {
    auto s = standard_splitting(n);
    RatMatrix T = beta_iso(s, s);
    EXPECT_EQ(T, RatMatrix::identity(spin_dim(n)));
    EXPECT_EQ(beta_parity(T, s, s), Parity::Even);
  }
}

TEST(Clifford, BetaOfHalfSwapIsOdd) {
  auto s1 = standard_splitting(1), s2 = half_swap(1);
  validate_splitting(s2);
  RatMatrix T = beta_iso(s1, s2);
  EXPECT_TRUE(intertwines(T, s1, s2));
  auto space = intertwiner_space(s1, s2);
  ASSERT_EQ(space.size(), 1u);
  EXPECT_EQ(rank(hstack(to_rat(primitive(space[0])), T)), rank(T));
  EXPECT_EQ(isotropic_intersection_dim(s1, s2), 1u);
  EXPECT_EQ(beta_parity(T, s1, s2), Parity::Odd);
  // H^1 of the source lands in even degrees of the target.
  for (unsigned col : {1u, 2u})
    for (unsigned row = 0; row < 4; ++row)
      if (sgn(T(row, col)) != 0) EXPECT_EQ(popcount(row) % 2, 0);
  EXPECT_TRUE(is_unimodular(primitive(T)));
}

TEST(Clifford, BetaOfFullSwapIsEven) {
  auto s1 = standard_splitting(1);
  IsotropicSplitting s2{s1.basis2, s1.basis1};
  RatMatrix T = beta_iso(s1, s2);
  EXPECT_TRUE(intertwines(T, s1, s2));
  EXPECT_EQ(isotropic_intersection_dim(s1, s2), 0u);
  EXPECT_EQ(beta_parity(T, s1, s2), Parity::Even);
}

TEST(Clifford, AdaptedFastPathAgrees) {
  Rng rng(44);
  for (int t = 0; t < 16; ++t) {
    const int n = 1 + t % 2;
    const std::size_t g = 2 * n;
    RatMatrix b(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        b(i, j) = uniform(rng, -2, 2);
        b(j, i) = -b(i, j);
      }
    RatMatrix swap = RatMatrix::identity(2 * g);
    for (std::size_t i = 1; i < g; ++i)
      if (uniform(rng, 0, 1)) {
        swap(i, i) = swap(g + i, g + i) = 0;
        swap(i, g + i) = swap(g + i, i) = 1;
      }
    auto s1 = standard_splitting(n);
    auto s2 = moved(swap * dual_translation(b), s1);
    RatMatrix x = beta_iso_adapted(s1, s2), y = beta_iso(s1, s2);
    EXPECT_TRUE(x == y || x == -y);
  }
  auto s1 = standard_splitting(2), s2 = half_swap(2);
  RatMatrix x = beta_iso_adapted(s1, s2), y = beta_iso(s1, s2);
  EXPECT_TRUE(x == y || x == -y);
}

TEST(Clifford, BetaUniqueAndParityMatchesIntersection) {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 2;
    auto s1 = random_splitting(n, rng), s2 = random_splitting(n, rng);
    RatMatrix T = beta_iso(s1, s2);
    EXPECT_TRUE(intertwines(T, s1, s2));
    if (n == 1 || t % 4 == 1) EXPECT_EQ(intertwiner_space(s1, s2).size(), 1u);
    bool even = is_even_op(T);
    EXPECT_EQ(even, isotropic_intersection_dim(s1, s2) % 2 == 0);
  }
}

TEST(Clifford, ParityIsAnEquivalence) {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 2;
    auto s1 = random_splitting(n, rng), s2 = random_splitting(n, rng), s3 = random_splitting(n, rng);
    bool p12 = beta_parity(beta_iso(s1, s2), s1, s2) == Parity::Odd;
    bool p23 = beta_parity(beta_iso(s2, s3), s2, s3) == Parity::Odd;
    bool p13 = beta_parity(beta_iso(s1, s3), s1, s3) == Parity::Odd;
    EXPECT_EQ(p13, p12 != p23);
  }
}

TEST(Clifford, ValidateSplittingRejects) {
  auto s = standard_splitting(1);
  IsotropicSplitting bad{s.basis1, s.basis1};
  EXPECT_THROW(validate_splitting(bad), NotABasis);
  IntMatrix b1 = s.basis1;
  b1(2, 0) = 1;
  EXPECT_ANY_THROW(validate_splitting({b1, s.basis2}));
}
