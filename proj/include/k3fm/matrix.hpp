#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "k3fm/numeric.hpp"

namespace k3fm {

// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> to_rows() const;

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool is_symmetric() const;
  bool is_identity() const;

  // Exact determinant, Bareiss fraction-free elimination. Square only.
  Int det() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

Int dot(const Vec& x, const Vec& y);

// x^T G y for a symmetric Gram matrix G.
Int pairing(const IntMat& gram, const Vec& x, const Vec& y);

bool is_zero(const Vec& x);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Int& c, const Vec& x);
Vec negate(const Vec& x);
Int content(const Vec& x);  // gcd of entries, 0 for the zero vector

}  // namespace k3fm
