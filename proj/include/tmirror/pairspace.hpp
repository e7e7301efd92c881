#pragma once

#include <string>

#include "tmirror/torus.hpp"

namespace tmirror {

// Lambda = Gamma + Gamma*, coordinates (e_1..e_2n, e*_1..e*_2n).
struct LambdaSpace {
  int n = 0;
  IntMatrix Q;
  RatMatrix Jprod;
};

struct WeakPair {
  Torus torus;
  RatMatrix phi1, phi2;  // omega = phi1 + i phi2, stored like NSVector::c
  bool operator==(const WeakPair& o) const {
    return torus == o.torus && phi1 == o.phi1 && phi2 == o.phi2;
  }
};

enum class PairClass { WeakOnly, AlgebraicPlus, AlgebraicMinus };
std::string to_string(PairClass c);

IntMatrix q_form(int n);
RatMatrix jprod(const Torus& A);
LambdaSpace build_lambda(const Torus& A);

// Validates NS invariants and invertibility of phi2.
WeakPair make_weak_pair(const Torus& A, const RatMatrix& phi1, const RatMatrix& phi2);
WeakPair conjugate(const WeakPair& p);

RatMatrix i_omega(const WeakPair& p);
RatMatrix e_form(const WeakPair& p);
PairClass classify_pair(const WeakPair& p);
WeakPair recover_omega(const Torus& A, const RatMatrix& I);

bool preserves_q(const RatMatrix& g, int n);

}  // namespace tmirror
