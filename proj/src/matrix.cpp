#include "mhahn/matrix.hpp"

namespace mhahn {

Matrix Matrix::identity(std::size_t dim, Backend b) {
  Matrix m(dim, b);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(b);
  return m;
}

void Matrix::require_compatible(const Matrix& o) const {
  if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
  if (backend_ != o.backend_) throw BackendMismatch();
}

Matrix Matrix::transpose() const {
  Matrix t(dim_, backend_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  std::size_t n = a.dim_;
  Matrix c(n, a.backend_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  return a.a_ == b.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::max_abs() const {
  Scalar m = Scalar::zero(backend_);
  for (const auto& x : a_) {
    Scalar ax = x.abs();
    if (m < ax) m = ax;
  }
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace mhahn
