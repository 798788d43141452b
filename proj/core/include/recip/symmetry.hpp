#pragma once

#include <cstdint>
#include <vector>

#include "recip/forms.hpp"
#include "recip/graph.hpp"
#include "recip/limits.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Bijection of 1..n; `image[v-1]` is the image of v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[static_cast<std::size_t>(v - 1)]; }
  VertexPair operator()(VertexPair p) const { return VertexPair::of((*this)(p.i), (*this)(p.j)); }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  /// Cycle notation without fixed points, e.g. "(1 2)(3 5)"; "()" for the
  /// identity.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// True when σ preserves vertex colours and the colour (or absence) of
/// every pair.
bool is_automorphism(const ColouredGraph& g, const Permutation& sigma);

/// Colour-preserving automorphism group described by a strong generating
/// set along the base 1, 2, …, n.
struct AutomorphismGroup {
  int n = 0;
  std::vector<Permutation> generators;  // no identity
  Integer order = 1;
  std::uint64_t search_nodes = 0;
};

/// Throws ResourceCapError when n exceeds limits.max_n or the backtracking
/// visits more than limits.max_search_nodes nodes.
AutomorphismGroup automorphism_group(const ColouredGraph& g, const Limits& limits = {});

/// Every element of the group (sorted, identity first). Throws
/// ResourceCapError when the order exceeds limits.max_group_elements.
std::vector<Permutation> automorphisms(const ColouredGraph& g, const Limits& limits = {});
std::vector<Permutation> group_elements(const AutomorphismGroup& group, const Limits& limits = {});

/// Orbits of a permutation group on V*V (pairs {i, j}, i ≤ j). Each
/// orbit is sorted and its first element, the lexicographically least
/// pair, is the representative. Orbits are ordered by representative.
struct PairOrbitPartition {
  int n = 0;
  std::vector<std::vector<VertexPair>> orbits;
  std::vector<std::size_t> orbit_of;  // by PairIndexer index

  std::size_t s() const { return orbits.size(); }
  std::size_t orbit_index(VertexPair p) const;
};

/// Generators suffice: orbits of the generated group are computed by
/// union-find.
PairOrbitPartition pair_orbits(const std::vector<Permutation>& generators, int n);

/// Orbits on vertices, sorted, ordered by least element.
std::vector<std::vector<int>> vertex_orbits(const std::vector<Permutation>& generators, int n);

/// x_rep − x_q for every orbit and every non-representative member q.
std::vector<LinearForm> symmetry_forms(const PairOrbitPartition& orbits);

}  // namespace recip
