#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "recip/rat_matrix.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Dense univariate polynomial in t. `coeffs()[k]` is the coefficient of
/// t^k; the leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs_low_to_high);

  static UniPoly constant(const Rational& c);
  static UniPoly t();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  /// `t^4 - 4*t^2`; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(UniPoly a, const Rational& c);

/// Euclidean division; throws DimensionError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, unsigned k);

/// det(t·I − M) for a square matrix with rational (typically integer)
/// entries, by fraction-free elimination over Q[t].
UniPoly charpoly(const RatMatrix& m);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, degree ≥ 1
  int multiplicity;
};

/// p = content · Π factor^multiplicity with pairwise coprime monic
/// squarefree factors and strictly increasing multiplicities.
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;

  /// Σ deg(factor): the number of distinct complex roots.
  int distinct_roots() const;
};

/// Yun's algorithm over Q. Throws DimensionError for the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

}  // namespace recip
