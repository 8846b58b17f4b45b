#include "k3fm/matrix.hpp"

#include <utility>

#include "k3fm/errors.hpp"

namespace k3fm {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw validation_error("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw validation_error("ragged row list");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec IntMat::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec IntMat::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vec> IntMat::to_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw validation_error("matrix size mismatch in product");
  IntMat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += v * o(k, j);
    }
  return p;
}

IntMat IntMat::operator-() const {
  IntMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Vec IntMat::apply(const Vec& x) const {
  if (x.size() != cols_) throw validation_error("vector size mismatch in apply");
  Vec y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool IntMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw validation_error("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat w = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && w(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      w.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        w(i, j) = t / prev;  // exact by Bareiss
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(a_[i * cols_ + k], a_[j * cols_ + k]);
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap(a_[k * cols_ + i], a_[k * cols_ + j]);
}

Int dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw validation_error("vector size mismatch in dot");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Int pairing(const IntMat& gram, const Vec& x, const Vec& y) {
  return dot(x, gram.apply(y));
}

bool is_zero(const Vec& x) {
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

Vec add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw validation_error("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw validation_error("vector size mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec scale(const Int& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

Vec negate(const Vec& x) { return scale(Int(-1), x); }

Int content(const Vec& x) {
  Int g = 0;
  for (const Int& v : x) g = gcd(g, v);
  return g;
}

}  // namespace k3fm
