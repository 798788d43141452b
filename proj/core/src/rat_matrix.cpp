#include "recip/rat_matrix.hpp"

#include <utility>

#include "recip/errors.hpp"

namespace recip {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RatVector RowSpace::reduce(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("row length does not match row space");
  RatVector r(v.begin(), v.end());
  for (const auto& [pivot, row] : rows_) {
    if (sgn(r[pivot]) == 0) continue;
    const Rational f = r[pivot];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(row[j]) != 0) r[j] -= f * row[j];
    }
  }
  return r;
}

bool RowSpace::contains(std::span<const Rational> v) const { return is_zero_vector(reduce(v)); }

bool RowSpace::insert(std::span<const Rational> v) { return insert_reduced(reduce(v)); }

bool RowSpace::insert_sparse(const std::map<std::size_t, Rational>& v) {
  RatVector dense(cols_);
  for (const auto& [j, c] : v) {
    if (j >= cols_) throw DimensionError("sparse row index out of range");
    dense[j] = c;
  }
  return insert(dense);
}

bool RowSpace::insert_reduced(RatVector r) {
  std::size_t pivot = 0;
  while (pivot < cols_ && sgn(r[pivot]) == 0) ++pivot;
  if (pivot == cols_) return false;
  const Rational inv = 1 / r[pivot];
  for (auto& x : r) {
    if (sgn(x) != 0) x *= inv;
  }
  for (auto& [p, row] : rows_) {
    if (sgn(row[pivot]) == 0) continue;
    const Rational f = row[pivot];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(r[j]) != 0) row[j] -= f * r[j];
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<RatVector> RowSpace::kernel() const {
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (rows_.contains(free)) continue;
    RatVector v(cols_);
    v[free] = 1;
    for (const auto& [pivot, row] : rows_) v[pivot] = -row[free];
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RatMatrix& m) {
  RowSpace space(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    space.insert(m.row(i));
    if (space.rank() == m.cols()) break;
  }
  return space.rank();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RowSpace space(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) space.insert(m.row(i));
  return space.kernel();
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace recip
