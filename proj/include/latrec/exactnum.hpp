#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latrec {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix. Rows are basis vectors throughout the library.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  const std::vector<T>& entries() const { return a_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  // Rows [first, first+count).
  Matrix slice_rows(std::size_t first, std::size_t count) const {
    Matrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

struct GsoData {
  std::vector<Rational> gs_norms_sq;
  // mu(i, j) = <b_i, b~_j> / |b~_j|^2 for j < i; unit diagonal, zero above.
  RatMatrix mu;
};

RatMatrix to_rational(const IntMatrix& m);
RatMatrix transpose(const RatMatrix& m);
IntMatrix transpose(const IntMatrix& m);
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mul(const IntMatrix& a, const RatMatrix& b);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
// a · bᵀ, the matrix of row inner products.
RatMatrix mul_transpose(const RatMatrix& a, const RatMatrix& b);
RatMatrix gram(const RatMatrix& b);
IntMatrix gram(const IntMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

GsoData gso(const RatMatrix& b);
GsoData gso_from_gram(const RatMatrix& g);
Rational gram_det_sq(const RatMatrix& b);
RatMatrix inverse(const RatMatrix& m);
// Solves x·A = rhs for square nonsingular A, row by row.
RatMatrix solve_left(const RatMatrix& a, const RatMatrix& rhs);
std::size_t matrix_rank(const RatMatrix& m);

std::size_t bitlength(const Integer& x);
std::size_t bitlength(const Rational& x);
std::size_t bitlength(const RatMatrix& m);
std::size_t bitlength(const IntMatrix& m);

Integer denominator_lcm(const RatMatrix& m);
Integer floor_q(const Rational& x);
Integer ceil_q(const Rational& x);
Integer round_q(const Rational& x);  // nearest, halves rounded up
Integer trunc_q(const Rational& x);  // toward zero
Rational pow_q(const Rational& x, unsigned long e);
// Exact log2 estimate of a positive rational, accurate to double precision.
double log2_q(const Rational& x);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

}  // namespace latrec
