#include "recip/pencil.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "recip/errors.hpp"

namespace recip {

int SegreSymbol::size() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::string SegreSymbol::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < multiplicities.size(); ++k) {
    if (k) out += ", ";
    out += multiplicities[k] == 1 ? "1" : "1_" + std::to_string(multiplicities[k]);
  }
  return out + "]";
}

SquarefreeDecomposition adjacency_spectrum(const ColouredGraph& g) {
  if (!g.is_uniform()) {
    throw UnsupportedInputError("pencil invariants need a uniform colouring (one vertex colour, at most one edge colour)");
  }
  return squarefree_decomposition(charpoly(g.adjacency()));
}

SegreSymbol segre_symbol(const ColouredGraph& g) {
  SegreSymbol out;
  for (const auto& f : adjacency_spectrum(g).factors) {
    out.multiplicities.insert(out.multiplicities.end(), static_cast<std::size_t>(f.factor.degree()), f.multiplicity);
  }
  std::sort(out.multiplicities.begin(), out.multiplicities.end(), std::greater<>());
  return out;
}

PencilProperties pencil_properties_from(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw DimensionError("pencil needs 1 <= r <= n");
  PencilProperties p;
  p.n = n;
  p.r = r;
  p.deg_reciprocal = r - 1;
  p.mld = r - 1;
  p.r_equals_one = r == 1;
  if (r >= 2) p.rmld = 2 * r - 3;
  p.n_linear = static_cast<long>(n) * (n + 1) / 2 - r;
  p.n_quadratic = static_cast<long>(r - 1) * (r - 2) / 2;
  return p;
}

PencilProperties pencil_properties(const ColouredGraph& g) {
  return pencil_properties_from(g.n(), adjacency_spectrum(g).distinct_roots());
}

}  // namespace recip
