#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

using Exponents = std::vector<std::uint16_t>;

/// Graded-lex "greater": higher total degree first, ties broken by the
/// lexicographically larger exponent vector (λ₁ > λ₂ > …).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in λ₁..λ_d with rational coefficients. Zero
/// coefficients are never stored; every exponent vector has length d.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  /// λ_{k+1}; `k` is 0-based.
  static MultiPoly variable(std::size_t num_vars, std::size_t k);
  static MultiPoly monomial(const Exponents& e, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·λ^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  /// Coefficient of λ^e (zero when absent).
  Rational coefficient(const Exponents& e) const;

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  /// Multiplies by the monomial λ^e in place.
  void shift(const Exponents& e);

  Rational evaluate(std::span<const Rational> point) const;

  /// If `*this == k · o` for a nonzero rational k, stores k and returns
  /// true. Zero polynomials are never proportional.
  bool proportional_to(const MultiPoly& o, Rational* k) const;

  /// Graded-lex text, e.g. `l1^3 - 6*l1*l2^2`; "0" for the zero polynomial.
  std::string to_string(const std::string& var_prefix = "l") const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t num_vars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& c);
MultiPoly operator*(const Rational& c, MultiPoly a);

/// p^k by repeated multiplication.
MultiPoly pow(const MultiPoly& p, unsigned k);

}  // namespace recip
