// Dense square matrices over Scalar.  Entry (i, j) is the coefficient of
// basis vector |i> in the image of |j>, so operators act on column vectors
// and transposition is plain matrix transposition.
#pragma once

#include <cstddef>
#include <vector>

#include "mhahn/scalar.hpp"

namespace mhahn {

class Matrix {
 public:
  Matrix() : dim_(0), backend_(Backend::Exact) {}
  Matrix(std::size_t dim, Backend b)
      : dim_(dim), backend_(b), a_(dim * dim, Scalar::zero(b)) {}

  static Matrix identity(std::size_t dim, Backend b);

  std::size_t dim() const { return dim_; }
  Backend backend() const { return backend_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  Scalar max_abs() const;

 private:
  void require_compatible(const Matrix& o) const;
  std::size_t dim_;
  Backend backend_;
  std::vector<Scalar> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

}  // namespace mhahn
