#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "recip/multi_poly.hpp"
#include "recip/rat_matrix.hpp"

namespace recip {

/// Symmetric n×n matrix of polynomials. Only the upper triangle (i ≤ j) is
/// stored; indices are 0-based.
class SymPolyMatrix {
 public:
  SymPolyMatrix() = default;
  SymPolyMatrix(std::size_t n, std::size_t num_vars);

  std::size_t size() const { return n_; }
  std::size_t num_vars() const { return num_vars_; }

  const MultiPoly& operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, MultiPoly p);

  RatMatrix evaluate(std::span<const Rational> point) const;

  friend bool operator==(const SymPolyMatrix&, const SymPolyMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<MultiPoly> upper_;
};

/// General dense polynomial matrix, used for products that need not be
/// symmetric.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> data_;
};

PolyMatrix multiply(const SymPolyMatrix& a, const SymPolyMatrix& b);

struct Adjugate {
  SymPolyMatrix adj;
  MultiPoly det;
};

/// Adjugate and determinant of a symmetric polynomial matrix, by Laplace
/// expansion with every minor over a column subset memoized (2ⁿ minors
/// per deleted row). Satisfies A·adj = det·I exactly. Throws
/// ResourceCapError when n exceeds `max_n`.
Adjugate adjugate(const SymPolyMatrix& a, int max_n = 12);

}  // namespace recip
