#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spinflow/rational.hpp"

namespace spinflow {

using CVec = std::vector<GaussRat>;

// Dense matrix over the Gaussian rationals.  Sizes here top out at 64x64
// (spinor bundles up to dimension 13), so schoolbook products are fine and
// exactness matters far more than speed.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(Rational(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const GaussRat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& z : a_)
      if (!z.is_zero()) return false;
    return true;
  }

  CMat operator+(const CMat& o) const {
    check_same_shape(o);
    CMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  CMat operator-(const CMat& o) const {
    check_same_shape(o);
    CMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  CMat operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    CMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const GaussRat& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const GaussRat& bkj = o.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  CMat operator*(const GaussRat& s) const {
    CMat r = *this;
    for (auto& z : r.a_) z *= s;
    return r;
  }

  CMat operator-() const { return *this * GaussRat(Rational(-1)); }

  CVec apply(const CVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    CVec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  CMat adjoint() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
  }

  GaussRat trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    GaussRat t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool operator==(const CMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const CMat& o) const { return !(*this == o); }

 private:
  void check_same_shape(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<GaussRat> a_;
};

inline GaussRat inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  // Hermitian inner product, conjugate-linear in the second slot.
  GaussRat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conj();
  return s;
}

inline CVec add(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  CVec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline CVec scale(const CVec& v, const GaussRat& s) {
  CVec r = v;
  for (auto& z : r) z *= s;
  return r;
}

inline bool is_zero(const CVec& v) {
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

}  // namespace spinflow
