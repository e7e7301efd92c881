#pragma once

#include <utility>

#include "tmirror/pairspace.hpp"

namespace tmirror {

// g = [[a, b], [c, d]] in 2n x 2n blocks on Gamma + Gamma*.
struct UBlocks {
  RatMatrix a, b, c, d;
};
UBlocks u_blocks(const RatMatrix& g);
// The inverse predicted for a Q-isometry: [[d^T, b^T], [c^T, a^T]].
RatMatrix u_inverse(const RatMatrix& g);

// Integral, Q-preserving, det 1 and commuting with Jprod.
bool u_membership(const RatMatrix& g, const Torus& A);
// Rational points: Q-preserving and commuting with Jprod.
bool u_rational_membership(const RatMatrix& g, const Torus& A);

using Omega = std::pair<RatMatrix, RatMatrix>;  // (phi1, phi2)

// (c + d omega)(a + b omega)^{-1}; NotInvertible, NotNSForm.
Omega siegel_act(const RatMatrix& g, const Omega& omega, const Torus& A);
WeakPair siegel_act(const RatMatrix& g, const WeakPair& p);

bool stabilizer_check(const RatMatrix& g, const WeakPair& p);
// phi2 a + phi1 b phi2 + phi2 b phi1 = d phi2 and
// phi1 a + phi1 b phi1 - phi2 b phi2 = c + d phi1.
bool k_omega_equations(const RatMatrix& g, const WeakPair& p);
bool i_omega_centralizer_check(const RatMatrix& g, const WeakPair& p);

RatMatrix translation(const RatMatrix& eta);  // [[1, 0], [eta, 1]]
RatMatrix dual_translation(const RatMatrix& b);  // [[1, b], [0, 1]]

}  // namespace tmirror
