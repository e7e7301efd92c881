#pragma once

#include "tmirror/pairspace.hpp"

namespace tmirror::testing {

inline Torus square_torus() { return make_torus(1, RatMatrix{{0, -1}, {1, 0}}); }
inline RatMatrix std_phi() { return RatMatrix{{0, 1}, {-1, 0}}; }
inline WeakPair square_pair() { return make_weak_pair(square_torus(), RatMatrix(2, 2), std_phi()); }

inline RatMatrix rat_units(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> ones) {
  RatMatrix m(n, n);
  for (auto [i, j] : ones) m(i, j) = 1;
  return m;
}

}  // namespace tmirror::testing
