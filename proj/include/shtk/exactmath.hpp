#pragma once

// Exact scalars over Q(i) and dense exact linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shtk/error.hpp"

namespace shtk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Q(i), stored as a pair of canonical rationals.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Scalar operator-() const { return {-re_, -im_}; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "p/q", "a/b+c/di", "i", "-3/2i", ... (either part omissible).
Scalar parse_scalar(std::string_view text);
/// Inverse of parse_scalar; "q" omitted when 1, imaginary unit coefficient 1 omitted.
std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
/// num/den in lowest terms (mpq_class(num, den) does not reduce).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Dense row-major matrix with dimensions fixed at construction.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DomainError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<T>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!(b(k, j) == T(0))) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;
using ScalarVector = std::vector<Scalar>;

ScalarMatrix conjugate_transpose(const ScalarMatrix& m);
ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b);
Scalar trace(const ScalarMatrix& m);
bool is_real(const ScalarMatrix& m);
ScalarMatrix to_scalar(const RationalMatrix& m);

/// Exact rank via Bareiss elimination (over Z for rational input, Z[i] otherwise).
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const ScalarMatrix& m);

/// Null-space basis (column vectors written as coefficient lists).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
std::vector<ScalarVector> kernel_basis(const ScalarMatrix& m);

/// Inverse of a square invertible rational matrix; throws DomainError if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Indices of a maximal set of linearly independent rows, greedy in row order.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);
/// Pivot columns of the reduced row echelon form.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

/// Dimension over Q(i) of the span of equally shaped matrices.
std::size_t span_dim(std::span<const ScalarMatrix> vectors);
/// Dimension over R of the span (matrices realified entrywise into (re, im)).
std::size_t real_span_dim(std::span<const ScalarMatrix> vectors);

/// Real coordinates (re block then im block) of a matrix, row-major.
RationalVector realify(const ScalarMatrix& m);
/// Stacks vectors as the rows of a rational matrix.
RationalMatrix stack_rows(std::span<const RationalVector> rows);

}  // namespace shtk
