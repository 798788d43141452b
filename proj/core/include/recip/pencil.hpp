#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recip/graph.hpp"
#include "recip/uni_poly.hpp"

namespace recip {

/// Segre symbol of the pencil spanned by I and the adjacency matrix of a
/// uniform graph. Symmetric matrices are diagonalizable, so every tuple
/// is (1,…,1); only its length (the eigenvalue multiplicity) is stored.
struct SegreSymbol {
  std::vector<int> multiplicities;  // one entry per distinct eigenvalue, descending

  int r() const { return static_cast<int>(multiplicities.size()); }
  int size() const;  // Σ multiplicities = n

  /// `[1_5, 1_4, 1]`: a run of m ones is written 1_m.
  std::string to_string() const;
};

/// Invariants of the pencil as functions of n and r. Only r is computed;
/// the degree, ML degree and reciprocal ML degree are closed-form labels.
struct PencilProperties {
  int n = 0;
  int r = 0;
  int deg_reciprocal = 0;  // r − 1
  int mld = 0;             // r − 1
  std::optional<int> rmld;  // 2r − 3, absent when r = 1
  long n_linear = 0;        // C(n+1,2) − r
  long n_quadratic = 0;     // C(r−1,2)
  bool r_equals_one = false;
};

/// Charpoly of the uncoloured adjacency matrix and its squarefree
/// decomposition. Throws UnsupportedInputError for non-uniform graphs.
SquarefreeDecomposition adjacency_spectrum(const ColouredGraph& g);

SegreSymbol segre_symbol(const ColouredGraph& g);
PencilProperties pencil_properties(const ColouredGraph& g);

/// The closed-form fields for given n and r.
PencilProperties pencil_properties_from(int n, int r);

}  // namespace recip
