#include "tmirror/pairspace.hpp"

namespace tmirror {

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::AlgebraicPlus: return "AlgebraicPlus";
    case PairClass::AlgebraicMinus: return "AlgebraicMinus";
    default: return "WeakOnly";
  }
}

IntMatrix q_form(int n) {
  const std::size_t N = 2 * static_cast<std::size_t>(n);
  IntMatrix Q(2 * N, 2 * N);
  for (std::size_t i = 0; i < N; ++i) Q(i, N + i) = Q(N + i, i) = 1;
  return Q;
}

RatMatrix jprod(const Torus& A) { return block_diag(A.J, -A.J.transpose()); }

LambdaSpace build_lambda(const Torus& A) { return {A.n, q_form(A.n), jprod(A)}; }

bool preserves_q(const RatMatrix& g, int n) {
  RatMatrix Q = to_rat(q_form(n));
  return g.transpose() * Q * g == Q;
}

WeakPair make_weak_pair(const Torus& A, const RatMatrix& phi1, const RatMatrix& phi2) {
  if (!is_ns_form(A, phi1)) throw NotNSForm("phi1 is not an NS form");
  if (!is_ns_form(A, phi2)) throw NotNSForm("phi2 is not an NS form");
  if (sgn(det(phi2)) == 0) throw SingularMatrix("phi2 is degenerate");
  return {A, phi1, phi2};
}

WeakPair conjugate(const WeakPair& p) { return {p.torus, p.phi1, -p.phi2}; }

RatMatrix i_omega(const WeakPair& p) {
  RatMatrix inv2 = invert(p.phi2);
  RatMatrix a = inv2 * p.phi1;
  RatMatrix c = p.phi2 + p.phi1 * a;
  RatMatrix d = -(p.phi1 * inv2);
  return block2(a, -inv2, c, d);
}

RatMatrix e_form(const WeakPair& p) {
  RatMatrix c = jprod(p.torus) * i_omega(p);
  return c.transpose() * to_rat(q_form(p.torus.n));
}

PairClass classify_pair(const WeakPair& p) {
  RatMatrix E = e_form(p);
  if (is_positive_definite(E)) return PairClass::AlgebraicPlus;
  if (is_negative_definite(E)) return PairClass::AlgebraicMinus;
  return PairClass::WeakOnly;
}

WeakPair recover_omega(const Torus& A, const RatMatrix& I) {
  const std::size_t N = A.J.rows();
  if (I.rows() != 2 * N || I.cols() != 2 * N) throw ShapeError("I must be 4n x 4n");
  RatMatrix I12 = I.block(0, N, N, N);
  if (sgn(det(I12)) == 0) throw Block12Singular();
  RatMatrix inv12 = invert(I12);
  RatMatrix phi2 = -inv12;
  RatMatrix phi1 = I.block(N, N, N, N) * inv12;
  WeakPair p = make_weak_pair(A, phi1, phi2);
  if (i_omega(p) != I) throw NotNSForm("I is not of the form I_omega");
  return p;
}

}  // namespace tmirror
