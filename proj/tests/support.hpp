#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "recip/forms.hpp"
#include "recip/graph.hpp"
#include "recip/graph_io.hpp"
#include "recip/rat_matrix.hpp"
#include "recip/reciprocal_ideal.hpp"

namespace recip::testing {

inline LinearForm lf(std::string_view text, int n) { return parse_linear_form(text, n); }

inline std::vector<LinearForm> lfs(const std::vector<std::string>& texts, int n) {
  std::vector<LinearForm> out;
  for (const auto& t : texts) out.push_back(parse_linear_form(t, n));
  return out;
}

/// 5-cycle with one vertex colour; letters colour edges 12, 23, 34, 45, 15.
inline ColouredGraph cycle5(std::string_view edge_letters) {
  const std::vector<std::pair<int, int>> order{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  std::vector<std::tuple<int, int, std::string>> edges;
  for (std::size_t k = 0; k < order.size(); ++k) {
    edges.emplace_back(order[k].first, order[k].second, std::string("e") + edge_letters[k]);
  }
  return ColouredGraph::from_labels(5, std::vector<std::string>(5, "v"), edges);
}

inline ColouredGraph family(Family f, int n, int m = 0) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  spec.m = m;
  return build_family(spec);
}

inline std::string fixture_path(const std::string& name) { return std::string(RECIP_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(RECIP_FIXTURE_DIR)) {
    const auto ext = entry.path().extension();
    if (ext == ".json" || ext == ".txt") names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

/// Random coloured graph: each pair is an edge with probability 1/2, and
/// vertex and edge colours are drawn from small disjoint palettes.
inline ColouredGraph random_graph(std::mt19937_64& rng, int n, int vertex_palette, int edge_palette) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> vcol(0, vertex_palette - 1);
  std::uniform_int_distribution<int> ecol(0, edge_palette - 1);
  std::vector<std::string> colours;
  for (int v = 0; v < n; ++v) colours.push_back("v" + std::to_string(vcol(rng)));
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j, "e" + std::to_string(ecol(rng)));
    }
  }
  return ColouredGraph::from_labels(n, colours, edges);
}

/// Inverse by Gauss-Jordan elimination; empty when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(m(p, k), m(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    const Rational scale = 1 / m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) *= scale;
      inv(c, k) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) -= f * m(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

/// Linear forms vanishing on A(λ)⁻¹ at random integer points λ, found
/// without any symbolic adjugate. Generic points cut out the same kernel
/// as the coefficient matrix once there are more samples than variables.
inline std::vector<LinearForm> random_evaluation_kernel(const ColouredGraph& g, std::mt19937_64& rng,
                                                        std::size_t extra_samples = 8) {
  const PairIndexer idx(g.n());
  const SymPolyMatrix a = coloured_adjacency(g);
  std::uniform_int_distribution<long> draw(-1000, 1000);
  const std::size_t samples = idx.size() + extra_samples;
  RatMatrix rows(samples, idx.size());
  for (std::size_t s = 0; s < samples;) {
    std::vector<Rational> point;
    for (std::size_t k = 0; k < a.num_vars(); ++k) point.emplace_back(draw(rng));
    const auto inv = inverse(a.evaluate(point));
    if (!inv) continue;
    for (std::size_t q = 0; q < idx.size(); ++q) {
      const VertexPair p = idx.pair(q);
      rows(s, q) = (*inv)(static_cast<std::size_t>(p.i - 1), static_cast<std::size_t>(p.j - 1));
    }
    ++s;
  }
  std::vector<LinearForm> out;
  for (const auto& v : kernel_basis(rows)) out.push_back(LinearForm::from_vector(idx, v));
  return out;
}

}  // namespace recip::testing
