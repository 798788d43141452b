#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recip/forms.hpp"
#include "recip/graph.hpp"
#include "recip/limits.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/symmetry.hpp"

namespace recip {

/// Whether the linear part is spanned by symmetry forms and component
/// zeros. dim_symmetry_span ≤ dim_with_component_zeros ≤ dim_linear_part.
struct SymmetryVerdict {
  std::size_t s = 0;
  /// Pair orbits inside one connected component; equals s for connected
  /// graphs. Cross-component orbits are already zero, so induced ⟺ r
  /// equals this count for uniform graphs.
  std::size_t s_within_components = 0;
  std::size_t dim_symmetry_span = 0;
  std::size_t dim_with_component_zeros = 0;
  std::size_t dim_linear_part = 0;
  bool induced = false;
  /// Basis of a complement of span(I′) in I₁: linear-part basis elements
  /// reduced modulo I′ and the extras found before them, in basis order.
  std::vector<LinearForm> extra_generators;
  std::optional<int> r;               // uniform graphs only
  std::optional<bool> s_equals_r;     // r == s_within_components; uniform graphs only
};

SymmetryVerdict classify(const LinearPart& linear, const PairOrbitPartition& orbits,
                         const std::vector<LinearForm>& component_zeros, std::optional<int> r = std::nullopt);

/// Full pipeline for one graph (uniform graphs also get r).
SymmetryVerdict classify(const ColouredGraph& g, const Limits& limits = {});

/// A binomial of I₁ and how it relates to the symmetries.
struct BinomialVerdict {
  LinearForm form;
  /// In span(symmetry forms), or span(symmetry forms ∪ component zeros)
  /// for a single variable.
  bool induced = false;
  /// Literally x_p − x_q with p, q in one pair orbit, or a single
  /// cross-component variable.
  bool strict = false;
};

std::vector<BinomialVerdict> check_binomials(const std::vector<LinearForm>& binomials,
                                             const PairOrbitPartition& orbits,
                                             const std::vector<LinearForm>& component_zeros);

/// G′: vertex colours are vertex orbits, edges are the pairs inside one
/// connected component, edge colours are pair orbits. Colours are numbered
/// by least representative.
ColouredGraph derived_graph(const ColouredGraph& g, const std::vector<Permutation>& generators);
ColouredGraph derived_graph(const ColouredGraph& g, const Limits& limits = {});

/// Linear-algebra invariants of L ⊆ L′ ⊆ Sym(n) under the trace inner
/// product ⟨X, Y⟩ = tr(XY).
struct AmbientReduction {
  std::size_t dim_ambient = 0;  // C(n+1,2)
  std::size_t dim_L = 0;
  std::size_t dim_Lprime = 0;        // number of I′ classes
  std::size_t dim_Lperp = 0;
  std::size_t dim_Lperp_prime = 0;   // dim(L^⊥ ∩ L′)
  bool L_in_Lprime = false;
  bool span_full = false;            // span(L′, L^⊥) = Sym(n)
};

AmbientReduction ambient_reduction(const ColouredGraph& g, const PairOrbitPartition& orbits);
AmbientReduction ambient_reduction(const ColouredGraph& g, const Limits& limits = {});

struct VerificationClause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyVerification {
  std::string label;
  int r = 0;
  int s = 0;
  int expected_r = 0;
  int expected_s = 0;
  std::vector<LinearForm> closed_form_generators;  // the non-symmetry forms, if any
  std::vector<VerificationClause> clauses;

  bool passed() const;
};

/// Checks the closed-form claims for cycles, complete graphs, K_{m,m},
/// hyperoctahedral graphs, K_{m,n} (1 < m < n) and stars: r and s, that
/// the explicit generator list spans the computed linear part, and for
/// K_{m,n} and stars the determinant formula. Throws UnsupportedInputError
/// for other families.
FamilyVerification verify_family(const FamilySpec& spec, const Limits& limits = {});

/// The explicit generator list for a covered family.
std::vector<LinearForm> family_generators(const FamilySpec& spec);

}  // namespace recip
