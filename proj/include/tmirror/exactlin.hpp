#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tmirror/errors.hpp"

namespace tmirror {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<T>& data() const { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (sgn(x) != 0) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    Matrix b(h, w);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  // Skips zero entries of the left factor; the operators here are mostly sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    T t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (sgn(y) == 0) continue;
          t = x * y;
          c(i, j) += t;
        }
      }
    return c;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sum shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

RatMatrix to_rat(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
IntMatrix to_int(const RatMatrix& m);  // throws NotIntegral

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix block2(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d);
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

bool is_symmetric(const RatMatrix& m);
bool is_skew(const RatMatrix& m);

Rat det(const RatMatrix& m);
Int det(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
RatMatrix invert(const RatMatrix& m);
// Columns form a basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);
// Unique solution X of a X = b; SingularMatrix if not unique or inconsistent.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);
// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

bool is_positive_definite(const RatMatrix& m);  // Sylvester; NotSymmetric
bool is_negative_definite(const RatMatrix& m);

// Clears denominators and divides by the content; zero stays zero.
IntMatrix primitive(const RatMatrix& m);
bool is_unimodular(const IntMatrix& m);

struct SmithForm {
  IntMatrix U, D, V;  // U * m * V = D
};
SmithForm smith_normal_form(const IntMatrix& m);

struct SkewNormalForm {
  IntMatrix basisChange;     // U with U^T phi U = [[0, Delta], [-Delta, 0]]
  std::vector<Int> deltas;  // positive, d_1 | d_2 | ...
};
SkewNormalForm skew_normal_form(const IntMatrix& phi);

// Row-style Hermite normal form with zero rows dropped.
IntMatrix hermite_rows(const IntMatrix& m);
// Z-basis (as rows, in Hermite form) of rowspace_Q(m) intersected with Z^cols.
IntMatrix saturate_rows(const RatMatrix& m);

struct GaussRat {
  Rat re, im;
  GaussRat() = default;
  GaussRat(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
};
GaussRat operator/(const GaussRat& a, const GaussRat& b);

struct GaussRatMatrix {
  RatMatrix re, im;
  GaussRatMatrix() = default;
  GaussRatMatrix(RatMatrix r, RatMatrix i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussRatMatrix(const RatMatrix& r) : re(r), im(r.rows(), r.cols()) {}
  bool operator==(const GaussRatMatrix& o) const { return re == o.re && im == o.im; }
  friend GaussRatMatrix operator+(const GaussRatMatrix& a, const GaussRatMatrix& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRatMatrix operator*(const GaussRatMatrix& a, const GaussRatMatrix& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};
GaussRatMatrix invert(const GaussRatMatrix& m);  // via the real 2N x 2N embedding

// Incremental row echelon basis over Q with sparse rows, for rank, membership
// and solving systems whose dense form would be large.
class SparseEchelon {
 public:
  using Vec = std::map<std::size_t, Rat>;

  explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the basis; v becomes its normal form.
  void reduce(Vec& v) const;
  bool contains(Vec v) const;
  // Returns true if v was independent and has been added.
  bool insert(Vec v);
  std::optional<std::size_t> leading(const Vec& v) const;

  // Treating column dim()-1 as right-hand side: back-substitute with free
  // variables set to zero; nullopt if inconsistent.
  std::optional<std::vector<Rat>> back_substitute() const;
  // Basis of the solution space of the homogeneous system, one vector per free column.
  std::vector<std::vector<Rat>> kernel() const;

  static Vec from_dense(const RatMatrix& m);  // row-major flattening
  static RatMatrix to_dense(const Vec& v, std::size_t rows, std::size_t cols);

 private:
  std::size_t dim_;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rat>>> rows_;  // pivot -> normalized row
};

}  // namespace tmirror
