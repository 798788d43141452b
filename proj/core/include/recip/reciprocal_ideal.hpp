#pragma once

#include <cstddef>
#include <vector>

#include "recip/forms.hpp"
#include "recip/graph.hpp"
#include "recip/limits.hpp"
#include "recip/poly_matrix.hpp"

namespace recip {

/// The map x_{ij} ↦ adj(A(λ))_{ij}. A homogeneous form lies in I(L⁻¹)
/// iff it vanishes under this substitution, since A⁻¹ = adj(A)/det(A)
/// and det(A) ≢ 0 for every valid coloured graph.
class Parametrization {
 public:
  explicit Parametrization(const ColouredGraph& g, const Limits& limits = {});

  const ColouredGraph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  const PairIndexer& indexer() const { return indexer_; }
  const SymPolyMatrix& matrix() const { return matrix_; }
  const Adjugate& adjugate() const { return adjugate_; }
  const MultiPoly& entry(VertexPair p) const {
    return adjugate_.adj(static_cast<std::size_t>(p.i - 1), static_cast<std::size_t>(p.j - 1));
  }

  MultiPoly substitute(const LinearForm& f) const;
  MultiPoly substitute(const QuadraticForm& f) const;

 private:
  ColouredGraph graph_;
  PairIndexer indexer_;
  SymPolyMatrix matrix_;
  Adjugate adjugate_;
};

/// Degree-1 part I₁. The pivots are the lexicographically least pairs
/// whose adjugate entries are linearly independent; modulo I₁ every
/// variable is a unique combination of pivot variables.
struct LinearPart {
  int n = 0;
  std::vector<LinearForm> basis;   // one per non-pivot pair, normalized
  std::vector<VertexPair> pivots;  // m = pivots.size() = C(n+1,2) − dim
  RatMatrix reduction;             // N × m: x_q ≡ Σ_a reduction(q, a)·x_{pivot a}

  std::size_t dimension() const { return basis.size(); }

  /// Coordinates of f modulo I₁ in the pivot variables.
  RatVector reduce(const LinearForm& f) const;
  bool contains(const LinearForm& f) const;
};

LinearPart linear_part(const Parametrization& param);

/// Degree-2 data. I₂ ⊇ S₁·I₁, and Sym²(pivot variables) is a complement
/// of S₁·I₁ in S₂, so the quadrics vanishing on the parametrization that
/// only involve pivot variables are a canonical complement of S₁·I₁ in I₂.
struct QuadraticPart {
  std::size_t full_dimension = 0;  // dim I₂
  std::size_t minimal_count = 0;   // dim I₂ − dim (S₁·I₁)₂
  std::vector<QuadraticForm> representatives;
};

QuadraticPart quadratic_part(const Parametrization& param, const LinearPart& linear);

/// Coordinates of q modulo (S₁·I₁)₂, over the monomials x_{p_a}x_{p_b}
/// (a ≤ b) of pivot variables in lexicographic order.
RatVector reduce_quadratic(const LinearPart& linear, const QuadraticForm& q);

/// x_{ij} for every pair i < j in different connected components.
std::vector<LinearForm> component_zero_forms(const ColouredGraph& g);

bool contains_form(const Parametrization& param, const LinearForm& f);
bool contains_form(const Parametrization& param, const QuadraticForm& f);

/// Every form of I₁ supported on one or two variables, up to scaling:
/// x_p when adj_p ≡ 0, and x_p − k·x_q (p < q) when adj_p = k·adj_q ≢ 0.
/// Normalized and sorted.
std::vector<LinearForm> binomial_forms(const Parametrization& param);

}  // namespace recip
