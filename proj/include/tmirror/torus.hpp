#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tmirror/exactlin.hpp"

namespace tmirror {

// Gamma is Z^{2n} in the standard basis; J acts on column vectors.
struct Torus {
  int n = 0;
  RatMatrix J;
  bool operator==(const Torus& o) const { return n == o.n && J == o.J; }
};

// c is stored as the matrix of v -> c(v, .) : Gamma -> Gamma*, so the Gram
// matrix of the bilinear form is c^T.  Skewness and J^T c J = c do not care.
struct NSVector {
  RatMatrix c;
  bool operator==(const NSVector& o) const { return c == o.c; }
};

Torus make_torus(int n, const RatMatrix& J);
Torus dual_torus(const Torus& A);

bool is_ns_form(const Torus& A, const RatMatrix& c);
std::vector<NSVector> ns_basis(const Torus& A);
std::vector<IntMatrix> hom_space(const Torus& A, const Torus& B);
bool is_hom(const Torus& A, const Torus& B, const RatMatrix& f);

RatMatrix phi_of_c(const NSVector& c);
// Gram matrix of b_c(x, y) = c(Jx, y).
RatMatrix polarization_form(const Torus& A, const RatMatrix& c);
bool check_polarization(const Torus& A, const NSVector& c);
// Enumerates Z-combinations of ns_basis by increasing max-norm up to budget.
std::optional<NSVector> find_polarization(const Torus& A, int budget);

// All integer vectors of length r with entries in [-budget, budget], ordered by
// max-norm then lexicographically; zero excluded.  Calls f until it returns true.
template <class F>
bool enumerate_by_max_norm(std::size_t r, int budget, F&& f) {
  std::vector<int> v(r);
  for (int k = 1; k <= budget; ++k) {
    std::fill(v.begin(), v.end(), -k);
    for (;;) {
      int m = 0;
      for (int x : v) m = std::max(m, x < 0 ? -x : x);
      if (m == k && f(v)) return true;
      bool carry_out = true;
      for (std::size_t i = r; i-- > 0;) {
        if (v[i] < k) {
          ++v[i];
          for (std::size_t j = i + 1; j < r; ++j) v[j] = -k;
          carry_out = false;
          break;
        }
      }
      if (carry_out) break;
    }
  }
  return false;
}

}  // namespace tmirror
