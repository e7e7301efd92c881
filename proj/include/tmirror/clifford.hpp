#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmirror/exactlin.hpp"

namespace tmirror {

// Element of Lambda Gamma* = H*(A,Z).  Bit (i-1) of a mask stands for x_i;
// the monomial of a mask is the wedge of its generators in increasing order.
struct SpinVec {
  int n = 0;
  std::map<unsigned, Int> coeffs;
  bool operator==(const SpinVec& o) const;
};

using CliffordOp = RatMatrix;

// Columns of basis1 and basis2 are vectors of Lambda = Z^{4n}.
struct IsotropicSplitting {
  IntMatrix basis1, basis2;
};

enum class Parity { Even, Odd };
std::string to_string(Parity p);

inline std::size_t spin_dim(int n) { return std::size_t{1} << (2 * n); }
inline int popcount(unsigned m) { return __builtin_popcount(m); }

RatMatrix to_column(const SpinVec& v);
SpinVec from_column(int n, const RatMatrix& col);  // NotIntegral on fractions

// Operators on the exterior algebra of g generators.
RatMatrix wedge_op(int g, unsigned j);
RatMatrix contraction_op(int g, const std::vector<Rat>& f);

// Standard module: Gamma contracts, Gamma* wedges.
RatMatrix cor_matrix(int n, const std::vector<Int>& lambda);
SpinVec cor_action(const std::vector<Int>& lambda, const SpinVec& v);

IsotropicSplitting standard_splitting(int n);
void validate_splitting(const IsotropicSplitting& s);  // NotABasis, NotIsotropic

// Module Lambda(M2) of a splitting with M1 acting by Q-contraction.
class SplitModule {
 public:
  explicit SplitModule(const IsotropicSplitting& s);
  int n() const { return n_; }
  const RatMatrix& generator(std::size_t k) const { return gens_[k]; }  // cor_s(e_k)
  RatMatrix cor(const RatMatrix& lambda) const;                        // lambda: 4n x 1
  RatMatrix apply(const RatMatrix& lambda, const RatMatrix& v) const;

 private:
  int n_;
  std::vector<RatMatrix> gens_;
};

RatMatrix mukai_pairing(int n);
CliffordOp clifford_involution(const CliffordOp& z);
bool is_even_op(const CliffordOp& z);
bool is_odd_op(const CliffordOp& z);
// lambda with cor_matrix(lambda) == X, if X lies in cor(Lambda) with integral coefficients.
std::optional<std::vector<Int>> decode_cor(int n, const RatMatrix& X);
bool is_spin(const CliffordOp& z);
IntMatrix r_of_z(const CliffordOp& z);

RatMatrix beta_iso(const IsotropicSplitting& s1, const IsotropicSplitting& s2);
// Same isomorphism built from the s1 generators complementary to the shared
// isotropic directions; requires the two M1's to meet nontrivially.
RatMatrix beta_iso_adapted(const IsotropicSplitting& s1, const IsotropicSplitting& s2);
// Basis of all T with T cor_s1 = cor_s2 T, from the full linear system.
std::vector<RatMatrix> intertwiner_space(const IsotropicSplitting& s1, const IsotropicSplitting& s2);
bool intertwines(const RatMatrix& T, const IsotropicSplitting& s1, const IsotropicSplitting& s2);

std::size_t isotropic_intersection_dim(const IsotropicSplitting& s1, const IsotropicSplitting& s2);
Parity beta_parity(const RatMatrix& T, const IsotropicSplitting& s1, const IsotropicSplitting& s2);

}  // namespace tmirror
