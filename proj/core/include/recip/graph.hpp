#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "recip/poly_matrix.hpp"
#include "recip/rat_matrix.hpp"

namespace recip {

/// Unordered vertex pair {i, j} with 1 ≤ i ≤ j ≤ n. Used both for edges
/// (i < j) and for the matrix positions x_{ij} (i = j allowed).
struct VertexPair {
  int i = 0;
  int j = 0;

  static VertexPair of(int a, int b) { return a <= b ? VertexPair{a, b} : VertexPair{b, a}; }
  bool is_diagonal() const { return i == j; }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple undirected graph on vertices 1..n with a vertex colouring and
/// an edge colouring. Colour ids are canonical: 1..d, vertex colours first
/// in vertex order, then edge colours in lexicographic edge order, so two
/// inputs that differ only by colour names compare equal.
class ColouredGraph {
 public:
  struct Edge {
    int u;
    int v;
    int colour;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  ColouredGraph() = default;

  /// Validates and canonicalizes. `vertex_colours[k]` is the colour label
  /// of vertex k+1; edge colours are labels too. Labels shared between a
  /// vertex and an edge are rejected.
  static ColouredGraph from_labels(int n, const std::vector<std::string>& vertex_colours,
                                   const std::vector<std::tuple<int, int, std::string>>& edges);

  int n() const { return n_; }
  int num_colours() const { return num_vertex_colours_ + num_edge_colours_; }
  int num_vertex_colours() const { return num_vertex_colours_; }
  int num_edge_colours() const { return num_edge_colours_; }

  /// Colour of vertex v (1-based).
  int vertex_colour(int v) const { return vertex_colour_[static_cast<std::size_t>(v - 1)]; }

  /// Edges sorted lexicographically by (u, v), u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Colour of the pair {u, v}; 0 when it is not an edge (u ≠ v).
  int pair_colour(int u, int v) const;
  bool has_edge(int u, int v) const { return pair_colour(u, v) != 0; }

  /// Exactly one vertex colour and at most one edge colour.
  bool is_uniform() const { return num_vertex_colours_ == 1 && num_edge_colours_ <= 1; }

  /// Uncoloured adjacency matrix (0/1 entries, zero diagonal).
  RatMatrix adjacency() const;

  friend bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
    return a.n_ == b.n_ && a.vertex_colour_ == b.vertex_colour_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int num_vertex_colours_ = 0;
  int num_edge_colours_ = 0;
  std::vector<int> vertex_colour_;
  std::vector<Edge> edges_;
  std::vector<int> pair_colour_;  // n×n, 0 for non-edges and the diagonal
};

enum class Family {
  kCycle,
  kComplete,
  kCompleteBipartite,
  kHyperoctahedral,
  kStar,
  kCirculant,
  kPetersen,
  kUniformOf,
};

const char* to_string(Family f);
Family family_from_string(const std::string& name);

struct FamilySpec {
  Family family = Family::kCycle;
  int n = 0;
  int m = 0;
  std::vector<int> connection_set;                  // circulant
  std::vector<std::pair<int, int>> edge_list;       // uniform-of

  /// Short label such as "C_5", "K_{2,4}", "circulant(6;1,2)".
  std::string label() const;
};

/// Uniform coloured graph of a named family. Vertex colour is λ₁ and the
/// edge colour (if any edge exists) is λ₂.
ColouredGraph build_family(const FamilySpec& spec);

/// A = Σ λ_k A_k with λ_{vertex colour} on the diagonal and λ_{edge colour}
/// on edge positions.
SymPolyMatrix coloured_adjacency(const ColouredGraph& g);

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
std::vector<std::vector<int>> connected_components(const ColouredGraph& g);

/// All pairs (i, j), i < j, that are not edges, in lexicographic order.
std::vector<VertexPair> complement_pairs(const ColouredGraph& g);

}  // namespace recip
