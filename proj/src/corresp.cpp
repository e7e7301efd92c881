#include "tmirror/corresp.hpp"

namespace tmirror {

using Mask = ExtElem::Mask;

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (Mask r = b; r; r &= r - 1) {
    unsigned j = __builtin_ctzll(r);
    inv += __builtin_popcountll(a >> (j + 1));
  }
  return inv % 2 ? -1 : 1;
}

ExtElem ExtElem::gen(unsigned j) {
  ExtElem e;
  e.terms[Mask{1} << j] = 1;
  return e;
}

ExtElem ExtElem::scalar(const Rat& c) {
  ExtElem e;
  if (sgn(c) != 0) e.terms[0] = c;
  return e;
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  for (const auto& [m, c] : o.terms) {
    auto& x = terms[m];
    x += c;
    if (sgn(x) == 0) terms.erase(m);
  }
  return *this;
}

ExtElem operator-(ExtElem a, const ExtElem& b) { return a += b * Rat(-1); }

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  ExtElem r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      auto& x = r.terms[ma | mb];
      if (s > 0)
        x += ca * cb;
      else
        x -= ca * cb;
    }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = sgn(it->second) == 0 ? r.terms.erase(it) : std::next(it);
  return r;
}

ExtElem operator*(ExtElem a, const Rat& c) {
  if (sgn(c) == 0) return ExtElem{};
  for (auto& [m, x] : a.terms) x *= c;
  return a;
}

ExtElem ExtElem::exp() const {
  ExtElem sum = scalar(1), power = scalar(1);
  for (int k = 1;; ++k) {
    power = power * *this * Rat(1, k);
    if (power.terms.empty()) break;
    sum += power;
  }
  return sum;
}

bool ProductClass::operator==(const ProductClass& o) const {
  if (n != o.n || m != o.m) return false;
  auto strip = [](const auto& c) {
    std::map<std::pair<unsigned, unsigned>, Int> r;
    for (const auto& [k, v] : c)
      if (sgn(v) != 0) r.emplace(k, v);
    return r;
  };
  return strip(coeffs) == strip(o.coeffs);
}

ExtElem to_ext(const ProductClass& c) {
  ExtElem e;
  for (const auto& [k, v] : c.coeffs) {
    if (sgn(v) == 0) continue;
    e.terms[Mask{k.first} | (Mask{k.second} << (2 * c.n))] += Rat(v);
  }
  return e;
}

ProductClass from_ext(int n, int m, const ExtElem& e) {
  ProductClass c{n, m, {}};
  const Mask lowmask = (Mask{1} << (2 * n)) - 1;
  for (const auto& [mask, x] : e.terms) {
    if (x.get_den() != 1) throw NotIntegral("class has fractional coefficients");
    c.coeffs[{static_cast<unsigned>(mask & lowmask), static_cast<unsigned>(mask >> (2 * n))}] = x.get_num();
  }
  return c;
}

SpinVec phi_poincare(int n, const SpinVec& v) {
  const unsigned full = (1u << (2 * n)) - 1;
  SpinVec out{n, {}};
  for (const auto& [I, c] : v.coeffs) {
    unsigned J = full & ~I;
    int eps = 0;
    for (unsigned j = 0; j < 2u * n; ++j)
      if (J & (1u << j)) eps += static_cast<int>(j) + 1;
    out.coeffs[J] += eps % 2 ? Int(-c) : c;
  }
  return out;
}

ProductClass c1_poincare(int n) {
  ProductClass c{n, n, {}};
  for (int i = 0; i < 2 * n; ++i) c.coeffs[{1u << i, 1u << i}] = 1;
  return c;
}

ProductClass exp_class(const ProductClass& c) { return from_ext(c.n, c.m, to_ext(c).exp()); }

RatMatrix correspondence_matrix(const ProductClass& xi) {
  const unsigned NA = 1u << (2 * xi.n), NB = 1u << (2 * xi.m), fullA = NA - 1;
  RatMatrix M(NB, NA);
  for (const auto& [k, c] : xi.coeffs) {
    const auto [a, b] = k;
    const unsigned t = fullA & ~a;
    // p*x_a u q*y_b u p*x_t = (-1)^{|b||t|} p*(x_a u x_t) u q*y_b
    int s = wedge_sign(a, t) * ((popcount(b) * popcount(t)) % 2 ? -1 : 1);
    M(b, t) += s > 0 ? Rat(c) : Rat(-c);
  }
  return M;
}

SpinVec push_forward_correspondence(const ProductClass& xi, const SpinVec& v) {
  if (v.n != xi.n) throw ShapeError("spinor does not live on the source factor");
  return from_column(xi.m, correspondence_matrix(xi) * to_column(v));
}

RatMatrix reverse_correspondence_matrix(const ProductClass& xi) {
  const unsigned NA = 1u << (2 * xi.n), NB = 1u << (2 * xi.m), fullB = NB - 1;
  RatMatrix M(NA, NB);
  for (const auto& [k, c] : xi.coeffs) {
    const auto [a, b] = k;
    const unsigned t = fullB & ~b;
    int s = wedge_sign(b, t);
    M(a, t) += s > 0 ? Rat(c) : Rat(-c);
  }
  return M;
}

ProductClass compose_correspondences(const ProductClass& xi, const ProductClass& eta) {
  if (xi.m != eta.n) throw ShapeError("middle factors differ");
  const unsigned gx = 2 * xi.n, gy = 2 * xi.m;
  ExtElem pxy, pyz;
  for (const auto& [k, c] : xi.coeffs) pxy.terms[Mask{k.first} | (Mask{k.second} << gx)] += Rat(c);
  for (const auto& [k, c] : eta.coeffs)
    pyz.terms[(Mask{k.first} << gx) | (Mask{k.second} << (gx + gy))] += Rat(c);
  ExtElem prod = pyz * pxy;
  const Mask ymask = ((Mask{1} << gy) - 1) << gx;
  ProductClass z{xi.n, eta.m, {}};
  for (const auto& [mask, c] : prod.terms) {
    if ((mask & ymask) != ymask) continue;
    unsigned a = static_cast<unsigned>(mask & ((Mask{1} << gx) - 1));
    unsigned d = static_cast<unsigned>(mask >> (gx + gy));
    z.coeffs[{a, d}] += c.get_num();
  }
  return z;
}

RatMatrix beta_explicit(int n) {
  const unsigned N = 1u << (2 * n);
  const unsigned low = (1u << n) - 1, high = low << n;
  RatMatrix T(N, N);
  for (unsigned A = 0; A < N; ++A) {
    const unsigned S = A & low, R = A & high;
    const unsigned Sbar = low & ~S;
    int eps = popcount(S) * popcount(R);
    for (int i = 0; i < n; ++i)
      if (S & (1u << i)) eps += i;
    eps += popcount(R) * popcount(Sbar);  // x_R u l_Sbar -> l_Sbar u x_R
    T(Sbar | R, A) = eps % 2 ? -1 : 1;
  }
  return T;
}

ProductClass tau_class(int n) {
  const unsigned low = (1u << n) - 1, high = low << n;
  ProductClass tau{n, n, {}};
  for (unsigned R = high;; R = (R - 1) & high) {
    // A-monomial x_R u x_n u ... u x_1
    ExtElem mono = ExtElem::scalar(1);
    for (unsigned j = n; j < 2u * n; ++j)
      if (R & (1u << j)) mono = mono * ExtElem::gen(j);
    for (int j = n - 1; j >= 0; --j) mono = mono * ExtElem::gen(j);
    const int sign_m = sgn(mono.terms.begin()->second);
    const unsigned a = high & ~R;
    ProductClass term{n, n, {{{a, R}, 1}}};
    const int kappa = sgn(correspondence_matrix(term)(R, R | low));
    tau.coeffs[{a, R}] = sign_m * kappa;
    if (R == 0) break;
  }
  return tau;
}

ProductClass xi_from_mirror(int n) {
  ExtElem D;
  for (int i = 0; i < n; ++i) D += ExtElem::gen(i) * ExtElem::gen(2 * n + i);
  if ((n - 1) % 2) D = D * Rat(-1);
  return from_ext(n, n, to_ext(tau_class(n)) * D.exp());
}

namespace {

// mu_* on A x A: p1*x -> p1*x, p2*x -> p2*x - p1*x.
ExtElem mu_push(int n, Mask mono, bool flip) {
  const unsigned g = 2 * n;
  ExtElem r = ExtElem::scalar(1);
  for (unsigned j = 0; j < 2 * g; ++j) {
    if (!(mono & (Mask{1} << j))) continue;
    if (j < g) {
      r = r * ExtElem::gen(j);
    } else {
      ExtElem img = ExtElem::gen(j) + ExtElem::gen(j - g) * Rat(flip ? 1 : -1);
      r = r * img;
    }
  }
  return r;
}

// alpha -> p2_*(eta u p1*alpha) as a matrix.
RatMatrix action_of(int n, const ExtElem& eta) {
  const unsigned g = 2 * n, N = 1u << g;
  const Mask full1 = (Mask{1} << g) - 1;
  RatMatrix M(N, N);
  for (unsigned a = 0; a < N; ++a) {
    ExtElem img = eta * ExtElem{{{Mask{a}, Rat(1)}}};
    for (const auto& [mask, c] : img.terms)
      if ((mask & full1) == full1) M(static_cast<unsigned>(mask >> g), a) += c;
  }
  return M;
}

}  // namespace

bool verify_cor_diagram(int n, bool flip_mu_sign) {
  const unsigned g = 2 * n;
  const Mask top2 = ((Mask{1} << g) - 1) << g;
  for (unsigned i = 0; i < g; ++i) {
    // phi_R D(x_i) = p1*(x_i) u p2*(x_1 ... x_2n)
    ExtElem eta = mu_push(n, (Mask{1} << i) | top2, flip_mu_sign);
    std::vector<Int> lam(2 * g);
    lam[g + i] = 1;
    if (action_of(n, eta) != cor_matrix(n, lam)) return false;
    // phi_R D(l_i) = (-1)^{i-1} p2*(x_1 .. x_i omitted .. x_2n)
    ExtElem eta2 = mu_push(n, top2 & ~(Mask{1} << (g + i)), flip_mu_sign) * Rat(i % 2 ? -1 : 1);
    std::vector<Int> lam2(2 * g);
    lam2[i] = 1;
    if (action_of(n, eta2) != cor_matrix(n, lam2)) return false;
  }
  return true;
}

}  // namespace tmirror
