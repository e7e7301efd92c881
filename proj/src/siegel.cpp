#include "tmirror/siegel.hpp"

namespace tmirror {

namespace {

std::size_t half(const RatMatrix& g) {
  if (!g.square() || g.rows() % 4 != 0) throw ShapeError("expected a 4n x 4n matrix");
  return g.rows() / 2;
}

}  // namespace

UBlocks u_blocks(const RatMatrix& g) {
  const std::size_t N = half(g);
  return {g.block(0, 0, N, N), g.block(0, N, N, N), g.block(N, 0, N, N), g.block(N, N, N, N)};
}

RatMatrix u_inverse(const RatMatrix& g) {
  UBlocks u = u_blocks(g);
  return block2(u.d.transpose(), u.b.transpose(), u.c.transpose(), u.a.transpose());
}

bool u_rational_membership(const RatMatrix& g, const Torus& A) {
  if (g.rows() != 4 * static_cast<std::size_t>(A.n) || !g.square()) return false;
  RatMatrix J = jprod(A);
  return preserves_q(g, A.n) && g * J == J * g;
}

bool u_membership(const RatMatrix& g, const Torus& A) {
  return u_rational_membership(g, A) && is_integral(g) && det(g) == 1;
}

Omega siegel_act(const RatMatrix& g, const Omega& omega, const Torus& A) {
  UBlocks u = u_blocks(g);
  if (u.a.rows() != omega.first.rows()) throw ShapeError("g and omega sizes differ");
  GaussRatMatrix w(omega.first, omega.second);
  GaussRatMatrix num = GaussRatMatrix(u.c) + GaussRatMatrix(u.d) * w;
  GaussRatMatrix den = GaussRatMatrix(u.a) + GaussRatMatrix(u.b) * w;
  GaussRatMatrix inv;
  try {
    inv = invert(den);
  } catch (const SingularMatrix&) {
    throw NotInvertible("a + b omega is singular");
  }
  GaussRatMatrix r = num * inv;
  if (!is_ns_form(A, r.re) || !is_ns_form(A, r.im)) throw NotNSForm("image is not in NS(C)");
  return {r.re, r.im};
}

WeakPair siegel_act(const RatMatrix& g, const WeakPair& p) {
  Omega r = siegel_act(g, {p.phi1, p.phi2}, p.torus);
  return make_weak_pair(p.torus, r.first, r.second);
}

bool stabilizer_check(const RatMatrix& g, const WeakPair& p) {
  Omega r = siegel_act(g, {p.phi1, p.phi2}, p.torus);
  return r.first == p.phi1 && r.second == p.phi2;
}

bool k_omega_equations(const RatMatrix& g, const WeakPair& p) {
  UBlocks u = u_blocks(g);
  const RatMatrix &f1 = p.phi1, &f2 = p.phi2;
  bool im = f2 * u.a + f1 * u.b * f2 + f2 * u.b * f1 == u.d * f2;
  bool re = f1 * u.a + f1 * u.b * f1 - f2 * u.b * f2 == u.c + u.d * f1;
  return im && re;
}

bool i_omega_centralizer_check(const RatMatrix& g, const WeakPair& p) {
  RatMatrix I = i_omega(p);
  return g * I == I * g;
}

RatMatrix translation(const RatMatrix& eta) {
  const std::size_t N = eta.rows();
  return block2(RatMatrix::identity(N), RatMatrix(N, N), eta, RatMatrix::identity(N));
}

RatMatrix dual_translation(const RatMatrix& b) {
  const std::size_t N = b.rows();
  return block2(RatMatrix::identity(N), b, RatMatrix(N, N), RatMatrix::identity(N));
}

}  // namespace tmirror
