#pragma once

#include <map>
#include <utility>

#include "tmirror/clifford.hpp"

namespace tmirror {

// Exterior algebra on up to 64 generators with rational coefficients; a mask
// is the wedge of its generators in increasing order.
class ExtElem {
 public:
  using Mask = unsigned long long;
  std::map<Mask, Rat> terms;

  static ExtElem gen(unsigned j);
  static ExtElem scalar(const Rat& c);
  ExtElem& operator+=(const ExtElem& o);
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);  // wedge
  friend ExtElem operator*(ExtElem a, const Rat& c);
  ExtElem exp() const;  // for even nilpotent elements
};

// Sign of x_a ^ x_b against the increasing monomial of a | b (0 if they meet).
int wedge_sign(ExtElem::Mask a, ExtElem::Mask b);

// Kunneth class on X x Y: (A-subset mask, B-subset mask) -> coefficient, the
// term being p*(x_a) u q*(y_b) in that order.  X has 2n generators, Y has 2m.
struct ProductClass {
  int n = 0, m = 0;
  std::map<std::pair<unsigned, unsigned>, Int> coeffs;
  bool operator==(const ProductClass& o) const;
};

ExtElem to_ext(const ProductClass& c);
ProductClass from_ext(int n, int m, const ExtElem& e);  // NotIntegral

SpinVec phi_poincare(int n, const SpinVec& v);
ProductClass c1_poincare(int n);
ProductClass exp_class(const ProductClass& c);

// v -> q_*(xi u p*v), integrating over X with x_1 u ... u x_2n -> 1.
SpinVec push_forward_correspondence(const ProductClass& xi, const SpinVec& v);
RatMatrix correspondence_matrix(const ProductClass& xi);
// w -> p_*(xi u q*w), the reverse direction of the same kernel.
RatMatrix reverse_correspondence_matrix(const ProductClass& xi);
// Class on X x Z of the composite of xi : X -> Y and eta : Y -> Z.
ProductClass compose_correspondences(const ProductClass& xi, const ProductClass& eta);

// H^1(B) is ordered (l_1..l_n, x_{n+1}..x_2n).
RatMatrix beta_explicit(int n);
ProductClass tau_class(int n);
ProductClass xi_from_mirror(int n);

bool verify_cor_diagram(int n, bool flip_mu_sign = false);

}  // namespace tmirror
