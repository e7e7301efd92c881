#pragma once

#include <vector>

#include "tmirror/clifford.hpp"
#include "tmirror/pairspace.hpp"

namespace tmirror {

struct MirrorCertificate {
  IntMatrix alpha;  // Lambda_A -> Lambda_B
  WeakPair pairA, pairB;
};

// Columns of gamma1 and gamma2 are bases of Gamma_1 and Gamma_2.
struct WellBecomingWitness {
  IntMatrix gamma1, gamma2;
};

struct MirrorResult {
  WeakPair pair;
  MirrorCertificate cert;
};

// FormMismatch, IntertwineFailure, NotInvertible.
MirrorCertificate verify_mirror(const WeakPair& pA, const WeakPair& pB, const IntMatrix& alpha);

// basis1 becomes Gamma_B, basis2 its dual.  NotIsotropic, NotInvariant, Block12Singular.
MirrorResult mirror_from_splitting(const WeakPair& p, const IsotropicSplitting& s);

bool check_well_becoming(const WeakPair& p, const WellBecomingWitness& w);  // NotABasis
IsotropicSplitting sigma_splitting(const WellBecomingWitness& w);
WellBecomingWitness induced_witness(int n);

struct GMirrorResult {
  WeakPair pair;
  MirrorCertificate cert;
  WellBecomingWitness witness;
};
GMirrorResult g_mirror(const WeakPair& p, const WellBecomingWitness& w);

struct EllipticMirror {
  WeakPair pairA, pairB;
  MirrorCertificate cert;
  std::vector<Int> deltas;
  // Gamma_i coordinates of the isogeny from the first factor to factor i.
  std::vector<IntMatrix> isogenies;
};
Torus elliptic_factor(const WeakPair& pB, int i);
// TransversalityNotFound when no transvection within the budget works.
EllipticMirror elliptic_mirror(const Torus& A, const GaussRat& tau, const IntMatrix& phi, int budget = 5);

// Same target: gamma = alpha2^{-1} alpha1 in U(A) centralizing I_omega.
// Different targets: g = alpha2 alpha1^{-1}, which carries pairB of c1 to pairB
// of c2 (an element of U(B) moving omega1 to omega2 when the tori agree).
// DifferentSource.
IntMatrix compare_mirror_isos(const MirrorCertificate& c1, const MirrorCertificate& c2);

// Splitting of Lambda_A whose module is H*(B) through alpha.
IsotropicSplitting target_splitting(const IntMatrix& alpha);
RatMatrix induced_beta(const MirrorCertificate& c);

}  // namespace tmirror
