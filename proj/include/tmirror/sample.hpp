#pragma once

#include <cstdint>
#include <random>

#include "tmirror/mirror.hpp"

namespace tmirror {

using Rng = std::mt19937_64;

// TORUS_MIRROR_SEED if set, otherwise fallback.
std::uint64_t env_seed(std::uint64_t fallback);

int uniform(Rng& rng, int lo, int hi);
Rat small_rational(Rng& rng, int num_bound, int den_bound);
IntMatrix random_unimodular(std::size_t N, Rng& rng, int steps = 0);
RatMatrix random_symmetric(std::size_t n, Rng& rng, int bound);

struct SampledPair {
  WeakPair pair;
  WellBecomingWitness witness;
};
SampledPair random_well_becoming(int n, Rng& rng);
WeakPair random_weak_pair(int n, Rng& rng);
WeakPair random_weak_pair_on(const Torus& A, Rng& rng);

IsotropicSplitting random_splitting(int n, Rng& rng);
RatMatrix random_spin(int n, Rng& rng);
// Rational point of U(A), built from NS translations, dual translations and
// quarter-free rotations x + y I_omega.
RatMatrix random_u_element(const Torus& A, Rng& rng);

struct EllipticInput {
  Torus A;
  GaussRat tau;
  IntMatrix phi;
};
// Torus carrying phi with elementary divisors deltas, J from symmetric X, Y in
// normal coordinates and then moved by U.
EllipticInput elliptic_input(const std::vector<Int>& deltas, const RatMatrix& X, const RatMatrix& Y,
                             const IntMatrix& U, const GaussRat& tau);
EllipticInput random_elliptic_input(int n, Rng& rng);

}  // namespace tmirror
