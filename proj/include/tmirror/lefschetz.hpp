#pragma once

#include <vector>

#include "tmirror/torus.hpp"

namespace tmirror {

struct GradedOperator {
  RatMatrix mat;
  int degree = 0;
};

struct LieAlgebraBasis {
  std::vector<GradedOperator> ops;
  std::size_t dim = 0;
};

// kappa = sum_{i<j} c_ij x_i ^ x_j
GradedOperator lefschetz_e(const NSVector& kappa);
GradedOperator lefschetz_h(int n);
bool hard_lefschetz(const RatMatrix& e, int n);
GradedOperator lefschetz_f(const NSVector& kappa);  // NoHardLefschetz
// Dimension of the homogeneous solution space of [e, f] = h over degree -2 operators.
std::size_t lefschetz_f_nullity(const NSVector& kappa);

LieAlgebraBasis generate_g_ns(const Torus& A, const std::vector<NSVector>& kappas);
// Hard-Lefschetz combinations of ns_basis with coefficients in [-budget, budget].
std::vector<NSVector> default_kappas(const Torus& A, int budget, std::size_t limit);

RatMatrix chi_form(int n);
bool preserves_chi(const RatMatrix& g, int n);

LieAlgebraBasis so_lambda_spinor_image(const Torus& A);
bool in_span(const LieAlgebraBasis& L, const RatMatrix& X);
bool bracket_closed(const LieAlgebraBasis& L);

}  // namespace tmirror
