#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  RatVector multiply(std::span<const Rational> v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVector data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Incrementally maintained reduced row echelon basis of a row space.
/// Every stored row has a leading 1 in its pivot column and zeros in all
/// other pivot columns.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds `v` to the spanning set; returns true if the rank grew.
  bool insert(std::span<const Rational> v);
  bool insert_sparse(const std::map<std::size_t, Rational>& v);

  /// Remainder of `v` after eliminating every pivot column.
  RatVector reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;

  /// Pivot column → reduced row, ordered by pivot column.
  const std::map<std::size_t, RatVector>& rows() const { return rows_; }

  /// Basis of {x : r·x = 0 for every row r}, one vector per free column
  /// in increasing order, each scaled by normalize_primitive.
  std::vector<RatVector> kernel() const;

 private:
  bool insert_reduced(RatVector v);

  std::size_t cols_;
  std::map<std::size_t, RatVector> rows_;
};

std::size_t rank(const RatMatrix& m);

/// Basis of {v : M v = 0} in reduced echelon order with primitive integer
/// scaling; empty iff M is injective.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Rational determinant(const RatMatrix& m);

}  // namespace recip
