#include "tmirror/torus.hpp"

namespace tmirror {

Torus make_torus(int n, const RatMatrix& J) {
  const std::size_t N = 2 * static_cast<std::size_t>(n);
  if (n < 1 || J.rows() != N || J.cols() != N) throw ShapeError("J must be 2n x 2n");
  if (J * J != -RatMatrix::identity(N)) throw NotComplexStructure();
  return {n, J};
}

Torus dual_torus(const Torus& A) { return {A.n, -A.J.transpose()}; }

bool is_ns_form(const Torus& A, const RatMatrix& c) {
  return c.rows() == A.J.rows() && is_skew(c) && A.J.transpose() * c * A.J == c;
}

namespace {

// Integral points of the kernel of a linear map given on a coordinate basis.
IntMatrix lattice_kernel(const std::vector<RatMatrix>& images) {
  const std::size_t k = images.size();
  const std::size_t len = images.empty() ? 0 : images[0].data().size();
  RatMatrix A(len, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < len; ++i) A(i, j) = images[j].data()[i];
  RatMatrix K = nullspace(A);
  return saturate_rows(K.transpose());
}

}  // namespace

std::vector<NSVector> ns_basis(const Torus& A) {
  const std::size_t N = A.J.rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<RatMatrix> images;
  const RatMatrix Jt = A.J.transpose();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      RatMatrix E(N, N);
      E(i, j) = 1;
      E(j, i) = -1;
      images.push_back(Jt * E * A.J - E);
      idx.emplace_back(i, j);
    }
  IntMatrix B = lattice_kernel(images);
  std::vector<NSVector> out;
  for (std::size_t r = 0; r < B.rows(); ++r) {
    RatMatrix c(N, N);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      c(idx[k].first, idx[k].second) = Rat(B(r, k));
      c(idx[k].second, idx[k].first) = Rat(-B(r, k));
    }
    out.push_back({c});
  }
  return out;
}

bool is_hom(const Torus& A, const Torus& B, const RatMatrix& f) {
  return f.rows() == B.J.rows() && f.cols() == A.J.rows() && B.J * f == f * A.J;
}

std::vector<IntMatrix> hom_space(const Torus& A, const Torus& B) {
  const std::size_t M = B.J.rows(), N = A.J.rows();
  std::vector<RatMatrix> images;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      RatMatrix E(M, N);
      E(i, j) = 1;
      images.push_back(B.J * E - E * A.J);
    }
  IntMatrix K = lattice_kernel(images);
  std::vector<IntMatrix> out;
  for (std::size_t r = 0; r < K.rows(); ++r) {
    IntMatrix f(M, N);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < N; ++j) f(i, j) = K(r, i * N + j);
    out.push_back(f);
  }
  return out;
}

RatMatrix phi_of_c(const NSVector& c) { return c.c; }

RatMatrix polarization_form(const Torus& A, const RatMatrix& c) { return (c * A.J).transpose(); }

bool check_polarization(const Torus& A, const NSVector& c) {
  RatMatrix b = polarization_form(A, c.c);
  if (!is_symmetric(b)) return false;
  return is_positive_definite(b);
}

std::optional<NSVector> find_polarization(const Torus& A, int budget) {
  auto basis = ns_basis(A);
  if (basis.empty()) return std::nullopt;
  std::optional<NSVector> found;
  enumerate_by_max_norm(basis.size(), budget, [&](const std::vector<int>& v) {
    RatMatrix c(A.J.rows(), A.J.rows());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) c += basis[k].c * Rat(v[k]);
    NSVector cand{c};
    if (check_polarization(A, cand)) {
      found = cand;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace tmirror
