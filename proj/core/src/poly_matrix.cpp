#include "recip/poly_matrix.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "recip/errors.hpp"

namespace recip {

SymPolyMatrix::SymPolyMatrix(std::size_t n, std::size_t num_vars)
    : n_(n), num_vars_(num_vars), upper_(n * (n + 1) / 2, MultiPoly(num_vars)) {}

std::size_t SymPolyMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("matrix index out of range");
  if (i > j) std::swap(i, j);
  // Row-major over the upper triangle.
  return i * (2 * n_ - i + 1) / 2 + (j - i);
}

const MultiPoly& SymPolyMatrix::operator()(std::size_t i, std::size_t j) const {
  return upper_[index(i, j)];
}

void SymPolyMatrix::set(std::size_t i, std::size_t j, MultiPoly p) {
  if (p.num_vars() != num_vars_) throw DimensionError("entry over a different variable set");
  upper_[index(i, j)] = std::move(p);
}

RatMatrix SymPolyMatrix::evaluate(std::span<const Rational> point) const {
  RatMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      m(i, j) = (*this)(i, j).evaluate(point);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
    : rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(num_vars)) {}

PolyMatrix multiply(const SymPolyMatrix& a, const SymPolyMatrix& b) {
  if (a.size() != b.size() || a.num_vars() != b.num_vars()) {
    throw DimensionError("matrix product size mismatch");
  }
  const std::size_t n = a.size();
  PolyMatrix c(n, n, a.num_vars());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

namespace {

// Multiplies `p` by `factor`, taking the cheap path when `factor` is a
// single term (the common case for coloured adjacency entries).
MultiPoly times(const MultiPoly& factor, const MultiPoly& p) {
  if (factor.size() == 1) {
    const auto& [e, c] = *factor.terms().begin();
    MultiPoly r = p;
    r.shift(e);
    if (c != 1) r *= c;
    return r;
  }
  return factor * p;
}

}  // namespace

Adjugate adjugate(const SymPolyMatrix& a, int max_n) {
  const std::size_t n = a.size();
  if (n == 0) throw DimensionError("adjugate of an empty matrix");
  if (static_cast<int>(n) > max_n) {
    throw ResourceCapError("adjugate: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(max_n));
  }
  const std::size_t vars = a.num_vars();
  Adjugate out{SymPolyMatrix(n, vars), MultiPoly(vars)};
  if (n == 1) {
    out.adj.set(0, 0, MultiPoly::constant(vars, 1));
    out.det = a(0, 0);
    return out;
  }

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly(vars));

  // For each deleted row i: minors[S] = det(rows r₁..r_|S| of A without
  // row i, columns S), expanding along the last row. The sign of column c
  // in S is (−1)^(number of elements of S above c).
  for (std::size_t del = 0; del < n; ++del) {
    for (auto& m : minors) m = MultiPoly(vars);
    minors[0] = MultiPoly::constant(vars, 1);
    std::vector<std::uint32_t> level{0};
    std::size_t t = 0;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == del) continue;
      ++t;
      std::vector<std::uint32_t> next;
      for (std::uint32_t s = 1; s <= full; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != t) continue;
        MultiPoly acc(vars);
        for (std::size_t c = 0; c < n; ++c) {
          const std::uint32_t bit = std::uint32_t{1} << c;
          if ((s & bit) == 0) continue;
          const MultiPoly& entry = a(row, c);
          const MultiPoly& sub = minors[s & ~bit];
          if (entry.is_zero() || sub.is_zero()) continue;
          const int above = std::popcount(s & ~((bit << 1) - 1));
          MultiPoly term = times(entry, sub);
          if (above % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        minors[s] = std::move(acc);
        next.push_back(s);
      }
      // Only the current level is needed by the next one.
      for (std::uint32_t s : level) {
        if (s != 0) minors[s] = MultiPoly(vars);
      }
      level = std::move(next);
    }
    for (std::size_t col = del; col < n; ++col) {
      MultiPoly cofactor = minors[full & ~(std::uint32_t{1} << col)];
      if ((del + col) % 2 == 1) cofactor = -cofactor;
      out.adj.set(del, col, std::move(cofactor));
    }
    if (del == 0) {
      MultiPoly det(vars);
      for (std::size_t col = 0; col < n; ++col) {
        if (a(0, col).is_zero()) continue;
        det += a(0, col) * out.adj(0, col);
      }
      out.det = std::move(det);
    }
  }
  return out;
}

}  // namespace recip
