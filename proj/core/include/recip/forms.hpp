#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recip/graph.hpp"
#include "recip/rat_matrix.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Bijection between the pairs (i, j), 1 ≤ i ≤ j ≤ n, and 0..N−1 with
/// N = n(n+1)/2, in lexicographic order (1,1),(1,2),…,(1,n),(2,2),….
class PairIndexer {
 public:
  explicit PairIndexer(int n);

  int n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t index(VertexPair p) const;
  std::size_t index(int i, int j) const { return index(VertexPair::of(i, j)); }
  VertexPair pair(std::size_t k) const { return pairs_[k]; }
  const std::vector<VertexPair>& pairs() const { return pairs_; }

 private:
  int n_;
  std::vector<VertexPair> pairs_;
};

/// Variable name for x_{ij}: `x13` while n ≤ 9, `x1_13` beyond.
std::string variable_name(VertexPair p, int n);

/// Σ c_p x_p over unordered pairs of 1..n. Zero coefficients are never
/// stored.
class LinearForm {
 public:
  using Terms = std::map<VertexPair, Rational>;

  explicit LinearForm(int n = 0) : n_(n) {}
  LinearForm(int n, Terms terms);

  static LinearForm variable(int n, VertexPair p);
  /// x_p − x_q.
  static LinearForm difference(int n, VertexPair p, VertexPair q);
  static LinearForm from_vector(const PairIndexer& idx, const RatVector& v);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(VertexPair p) const;

  void add(VertexPair p, const Rational& c);

  RatVector to_vector(const PairIndexer& idx) const;

  /// Coprime integer coefficients with the lexicographically least pair
  /// carrying a positive coefficient.
  LinearForm normalized() const;

  /// `x11 - x22`, `2*x12 - 4*x56`; "0" for the zero form.
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  /// Orders by support then coefficients; used for deterministic sorting.
  friend bool operator<(const LinearForm& a, const LinearForm& b);

 private:
  int n_;
  Terms terms_;
};

/// Monomial x_p·x_q with p ≤ q.
using PairMonomial = std::pair<VertexPair, VertexPair>;

class QuadraticForm {
 public:
  using Terms = std::map<PairMonomial, Rational>;

  explicit QuadraticForm(int n = 0) : n_(n) {}

  static QuadraticForm product(const LinearForm& a, const LinearForm& b);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(VertexPair p, VertexPair q, const Rational& c);

  QuadraticForm normalized() const;

  /// `x13^2 - 2*x12^2 + x11*x13`; monomials in lexicographic order.
  std::string to_string() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Parses `x11 - x22`, `2*x12 - 4x56`, `x1_10 + 3/2*x{2,10}`. Throws
/// ParseError on malformed input or a non-linear term, ValidationError on
/// an index outside 1..n.
LinearForm parse_linear_form(std::string_view text, int n);

/// As parse_linear_form, but every term must be a product of two
/// variables (`x13^2`, `x12*x13`, `-2x12x14`).
QuadraticForm parse_quadratic_form(std::string_view text, int n);

/// Rank of a set of linear forms.
std::size_t span_rank(const std::vector<LinearForm>& forms, const PairIndexer& idx);

/// True when the two lists span the same subspace.
bool same_span(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b, const PairIndexer& idx);

}  // namespace recip
