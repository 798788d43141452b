#include "recip/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "recip/errors.hpp"

namespace recip {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(ValidationKind::kInvalidParameter, what);
}

}  // namespace

ColouredGraph ColouredGraph::from_labels(
    int n, const std::vector<std::string>& vertex_colours,
    const std::vector<std::tuple<int, int, std::string>>& edges) {
  if (n < 1) throw ValidationError(ValidationKind::kVertexRange, "graph needs at least one vertex");
  if (static_cast<int>(vertex_colours.size()) != n) {
    throw ValidationError(ValidationKind::kUncolouredVertex,
                          "expected " + std::to_string(n) + " vertex colours, got " +
                              std::to_string(vertex_colours.size()));
  }
  for (int v = 1; v <= n; ++v) {
    if (vertex_colours[static_cast<std::size_t>(v - 1)].empty()) {
      throw ValidationError(ValidationKind::kUncolouredVertex, "vertex " + std::to_string(v));
    }
  }

  std::map<std::pair<int, int>, std::string> edge_map;
  for (const auto& [a, b, colour] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ValidationError(ValidationKind::kVertexRange,
                            "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw ValidationError(ValidationKind::kLoop, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (colour.empty()) {
      throw ValidationError(ValidationKind::kUncolouredEdge,
                            "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    auto key = std::minmax(a, b);
    if (!edge_map.emplace(std::pair{key.first, key.second}, colour).second) {
      throw ValidationError(ValidationKind::kDuplicateEdge,
                            "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  }

  std::set<std::string> vertex_labels(vertex_colours.begin(), vertex_colours.end());
  for (const auto& [key, colour] : edge_map) {
    if (vertex_labels.contains(colour)) {
      throw ValidationError(ValidationKind::kSharedColour,
                            "colour '" + colour + "' used on a vertex and on an edge");
    }
  }

  ColouredGraph g;
  g.n_ = n;
  std::unordered_map<std::string, int> ids;
  int next = 1;
  for (const auto& label : vertex_colours) {
    auto [it, inserted] = ids.try_emplace(label, next);
    if (inserted) ++next;
    g.vertex_colour_.push_back(it->second);
  }
  g.num_vertex_colours_ = next - 1;
  g.pair_colour_.assign(static_cast<std::size_t>(n * n), 0);
  for (const auto& [key, label] : edge_map) {
    auto [it, inserted] = ids.try_emplace(label, next);
    if (inserted) ++next;
    g.edges_.push_back({key.first, key.second, it->second});
    g.pair_colour_[static_cast<std::size_t>((key.first - 1) * n + key.second - 1)] = it->second;
    g.pair_colour_[static_cast<std::size_t>((key.second - 1) * n + key.first - 1)] = it->second;
  }
  g.num_edge_colours_ = next - 1 - g.num_vertex_colours_;
  return g;
}

int ColouredGraph::pair_colour(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw DimensionError("vertex out of range");
  return pair_colour_[static_cast<std::size_t>((u - 1) * n_ + v - 1)];
}

RatMatrix ColouredGraph::adjacency() const {
  RatMatrix a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    a(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1)) = 1;
    a(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(e.u - 1)) = 1;
  }
  return a;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kHyperoctahedral: return "hyperoctahedral";
    case Family::kStar: return "star";
    case Family::kCirculant: return "circulant";
    case Family::kPetersen: return "petersen";
    case Family::kUniformOf: return "uniform-of";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::kCycle, Family::kComplete, Family::kCompleteBipartite,
                   Family::kHyperoctahedral, Family::kStar, Family::kCirculant,
                   Family::kPetersen, Family::kUniformOf}) {
    if (name == to_string(f)) return f;
  }
  if (name == "uniform_of") return Family::kUniformOf;
  throw ValidationError(ValidationKind::kInvalidParameter, "unknown family '" + name + "'");
}

std::string FamilySpec::label() const {
  std::ostringstream out;
  switch (family) {
    case Family::kCycle: out << "C_" << n; break;
    case Family::kComplete: out << "K_" << n; break;
    case Family::kCompleteBipartite: out << "K_{" << m << "," << n << "}"; break;
    case Family::kHyperoctahedral: out << "H_" << m; break;
    case Family::kStar: out << "star_" << n; break;
    case Family::kCirculant: {
      out << "circulant(" << n << ";";
      for (std::size_t k = 0; k < connection_set.size(); ++k) {
        out << (k ? "," : "") << connection_set[k];
      }
      out << ")";
      break;
    }
    case Family::kPetersen: out << "Petersen"; break;
    case Family::kUniformOf: out << "uniform(" << n << " vertices, " << edge_list.size() << " edges)"; break;
  }
  return out.str();
}

namespace {

ColouredGraph uniform_graph(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<std::tuple<int, int, std::string>> labelled;
  for (const auto& [a, b] : edges) labelled.emplace_back(a, b, "e");
  return ColouredGraph::from_labels(n, std::vector<std::string>(static_cast<std::size_t>(n), "v"), labelled);
}

void add(std::set<std::pair<int, int>>& edges, int a, int b) {
  if (a == b) return;
  edges.insert(std::minmax(a, b));
}

}  // namespace

ColouredGraph build_family(const FamilySpec& spec) {
  std::set<std::pair<int, int>> edges;
  int n = spec.n;
  switch (spec.family) {
    case Family::kCycle:
      require(n >= 3, "cycle needs n >= 3");
      for (int i = 1; i <= n; ++i) add(edges, i, i % n + 1);
      break;
    case Family::kComplete:
      require(n >= 1, "complete graph needs n >= 1");
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) add(edges, i, j);
      }
      break;
    case Family::kCompleteBipartite: {
      const int m = spec.m;
      require(m >= 1 && spec.n >= 1, "complete_bipartite needs m, n >= 1");
      require(m <= spec.n, "complete_bipartite needs m <= n");
      n = m + spec.n;
      if (m == spec.n) {
        // K_{m,m} is split by vertex parity.
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            if ((i + j) % 2 == 1) add(edges, i, j);
          }
        }
      } else {
        for (int i = 1; i <= m; ++i) {
          for (int j = m + 1; j <= n; ++j) add(edges, i, j);
        }
      }
      break;
    }
    case Family::kHyperoctahedral:
      require(spec.m >= 1, "hyperoctahedral needs m >= 1");
      n = 2 * spec.m;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (!(i % 2 == 1 && j == i + 1)) add(edges, i, j);
        }
      }
      break;
    case Family::kStar:
      require(n >= 2, "star needs n >= 2");
      for (int j = 2; j <= n; ++j) add(edges, 1, j);
      break;
    case Family::kCirculant: {
      require(n >= 3, "circulant needs n >= 3");
      require(!spec.connection_set.empty(), "circulant needs a nonempty connection set");
      for (int s : spec.connection_set) {
        require(s >= 1 && s <= n / 2, "circulant connection set must lie in 1..floor(n/2)");
        for (int i = 1; i <= n; ++i) add(edges, i, (i - 1 + s) % n + 1);
      }
      break;
    }
    case Family::kPetersen:
      n = 10;
      for (int i = 1; i <= 5; ++i) {
        add(edges, i, i % 5 + 1);
        add(edges, i, i + 5);
        add(edges, i + 5, (i + 1) % 5 + 6);
      }
      break;
    case Family::kUniformOf:
      require(n >= 1, "uniform-of needs n >= 1");
      for (const auto& [a, b] : spec.edge_list) {
        if (a < 1 || a > n || b < 1 || b > n) {
          throw ValidationError(ValidationKind::kVertexRange, "uniform-of edge out of range");
        }
        if (a == b) throw ValidationError(ValidationKind::kLoop, "uniform-of edge is a loop");
        if (!edges.insert(std::minmax(a, b)).second) {
          throw ValidationError(ValidationKind::kDuplicateEdge, "uniform-of edge repeated");
        }
      }
      break;
  }
  return uniform_graph(n, edges);
}

SymPolyMatrix coloured_adjacency(const ColouredGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  const auto d = static_cast<std::size_t>(g.num_colours());
  SymPolyMatrix a(n, d);
  for (int v = 1; v <= g.n(); ++v) {
    a.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1),
          MultiPoly::variable(d, static_cast<std::size_t>(g.vertex_colour(v) - 1)));
  }
  for (const auto& e : g.edges()) {
    a.set(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1),
          MultiPoly::variable(d, static_cast<std::size_t>(e.colour - 1)));
  }
  return a;
}

std::vector<std::vector<int>> connected_components(const ColouredGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= g.n(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> complement_pairs(const ColouredGraph& g) {
  std::vector<VertexPair> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (!g.has_edge(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace recip
