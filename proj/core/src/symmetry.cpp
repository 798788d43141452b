#include "recip/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DimensionError("permutation image is not a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw DimensionError("composing permutations of different degree");
  std::vector<int> image(b.image_.size());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = a(b.image_[k]);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) image[static_cast<std::size_t>(image_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(image));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> done(image_.size(), false);
  for (int v = 1; v <= n(); ++v) {
    if (done[static_cast<std::size_t>(v - 1)] || (*this)(v) == v) continue;
    out << "(";
    for (int w = v; !done[static_cast<std::size_t>(w - 1)]; w = (*this)(w)) {
      done[static_cast<std::size_t>(w - 1)] = true;
      out << (w == v ? "" : " ") << w;
    }
    out << ")";
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

bool is_automorphism(const ColouredGraph& g, const Permutation& sigma) {
  if (sigma.n() != g.n()) return false;
  for (int i = 1; i <= g.n(); ++i) {
    if (g.vertex_colour(sigma(i)) != g.vertex_colour(i)) return false;
    for (int j = i + 1; j <= g.n(); ++j) {
      if (g.pair_colour(sigma(i), sigma(j)) != g.pair_colour(i, j)) return false;
    }
  }
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColouredGraph& g, const Limits& limits) : g_(g), limits_(limits), n_(g.n()) {
    // Signature: vertex colour plus the sorted multiset of incident edge
    // colours. Automorphisms map each vertex to one of equal signature.
    std::map<std::vector<int>, int> ids;
    signature_.resize(static_cast<std::size_t>(n_ + 1));
    for (int v = 1; v <= n_; ++v) {
      std::vector<int> sig{g.vertex_colour(v)};
      std::vector<int> incident;
      for (int w = 1; w <= n_; ++w) {
        if (w != v && g.has_edge(v, w)) incident.push_back(g.pair_colour(v, w));
      }
      std::sort(incident.begin(), incident.end());
      sig.insert(sig.end(), incident.begin(), incident.end());
      signature_[static_cast<std::size_t>(v)] = ids.try_emplace(sig, static_cast<int>(ids.size())).first->second;
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  /// An automorphism fixing 1..b−1 with b ↦ v, if one exists.
  std::optional<Permutation> find(int b, int v) {
    order_ = assignment_order(b);
    image_.assign(static_cast<std::size_t>(n_ + 1), 0);
    used_.assign(static_cast<std::size_t>(n_ + 1), false);
    base_ = b;
    target_ = v;
    if (!extend(0)) return std::nullopt;
    return Permutation(std::vector<int>(image_.begin() + 1, image_.end()));
  }

  int signature(int v) const { return signature_[static_cast<std::size_t>(v)]; }

 private:
  // Fixed prefix and base point first, then greedily the vertex with the
  // most edges into the already ordered set, so constraints bite early.
  std::vector<int> assignment_order(int b) const {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n_ + 1), false);
    for (int v = 1; v <= b; ++v) {
      order.push_back(v);
      placed[static_cast<std::size_t>(v)] = true;
    }
    while (static_cast<int>(order.size()) < n_) {
      int best = -1;
      int best_links = -1;
      for (int v = 1; v <= n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int u : order) links += g_.has_edge(u, v) ? 1 : 0;
        if (links > best_links) {
          best = v;
          best_links = links;
        }
      }
      order.push_back(best);
      placed[static_cast<std::size_t>(best)] = true;
    }
    return order;
  }

  bool consistent(std::size_t pos, int u, int w) const {
    if (signature(u) != signature(w)) return false;
    for (std::size_t k = 0; k < pos; ++k) {
      const int prev = order_[k];
      if (g_.pair_colour(u, prev) != g_.pair_colour(w, image_[static_cast<std::size_t>(prev)])) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    if (++nodes_ > limits_.max_search_nodes) {
      throw ResourceCapError("automorphism search exceeded " + std::to_string(limits_.max_search_nodes) +
                             " nodes");
    }
    const int u = order_[pos];
    auto attempt = [&](int w) {
      if (used_[static_cast<std::size_t>(w)] || !consistent(pos, u, w)) return false;
      image_[static_cast<std::size_t>(u)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(pos + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      image_[static_cast<std::size_t>(u)] = 0;
      return false;
    };
    if (u < base_) return attempt(u);
    if (u == base_) return attempt(target_);
    for (int w = 1; w <= n_; ++w) {
      if (attempt(w)) return true;
    }
    return false;
  }

  const ColouredGraph& g_;
  const Limits& limits_;
  int n_;
  std::vector<int> signature_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  int base_ = 0;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
};

std::vector<int> orbit_of(int b, const std::vector<Permutation>& gens) {
  std::vector<int> orbit{b};
  std::set<int> seen{b};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& g : gens) {
      const int w = g(orbit[k]);
      if (seen.insert(w).second) orbit.push_back(w);
    }
  }
  return orbit;
}

}  // namespace

AutomorphismGroup automorphism_group(const ColouredGraph& g, const Limits& limits) {
  if (g.n() > limits.max_n) {
    throw ResourceCapError("automorphism search: n = " + std::to_string(g.n()) + " exceeds cap " +
                           std::to_string(limits.max_n));
  }
  AutomorphismGroup group;
  group.n = g.n();
  AutomorphismSearch search(g, limits);
  // Walk the stabilizer chain bottom-up: at level b every generator found
  // so far fixes 1..b−1, so the orbit of b under them is a lower bound on
  // the orbit under the stabilizer; each missing candidate is decided by
  // one backtracking search.
  for (int b = g.n(); b >= 1; --b) {
    std::vector<int> orbit = orbit_of(b, group.generators);
    std::set<int> in_orbit(orbit.begin(), orbit.end());
    for (int v = b + 1; v <= g.n(); ++v) {
      if (in_orbit.contains(v) || search.signature(v) != search.signature(b)) continue;
      if (auto sigma = search.find(b, v)) {
        group.generators.push_back(*sigma);
        orbit = orbit_of(b, group.generators);
        in_orbit = std::set<int>(orbit.begin(), orbit.end());
      }
    }
    group.order *= static_cast<unsigned long>(orbit.size());
  }
  group.search_nodes = search.nodes();
  return group;
}

std::vector<Permutation> group_elements(const AutomorphismGroup& group, const Limits& limits) {
  if (group.order > limits.max_group_elements) {
    throw ResourceCapError("automorphism group of order " + group.order.get_str() + " exceeds element cap " +
                           std::to_string(limits.max_group_elements));
  }
  std::set<Permutation> seen{Permutation::identity(group.n)};
  std::deque<Permutation> queue{Permutation::identity(group.n)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& gen : group.generators) {
      Permutation q = gen * p;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  if (Integer(static_cast<unsigned long>(seen.size())) != group.order) {
    throw InternalError("group closure size disagrees with the stabilizer-chain order");
  }
  // Identity is the lexicographically least image vector.
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> automorphisms(const ColouredGraph& g, const Limits& limits) {
  return group_elements(automorphism_group(g, limits), limits);
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so roots are orbit minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t PairOrbitPartition::orbit_index(VertexPair p) const {
  return orbit_of[PairIndexer(n).index(p)];
}

PairOrbitPartition pair_orbits(const std::vector<Permutation>& generators, int n) {
  const PairIndexer idx(n);
  UnionFind uf(idx.size());
  for (const auto& sigma : generators) {
    if (sigma.n() != n) throw DimensionError("generator degree differs from n");
    for (std::size_t k = 0; k < idx.size(); ++k) uf.unite(k, idx.index(sigma(idx.pair(k))));
  }
  PairOrbitPartition out;
  out.n = n;
  out.orbit_of.resize(idx.size());
  std::map<std::size_t, std::size_t> root_to_orbit;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto [it, inserted] = root_to_orbit.try_emplace(uf.find(k), out.orbits.size());
    if (inserted) out.orbits.emplace_back();
    out.orbits[it->second].push_back(idx.pair(k));
    out.orbit_of[k] = it->second;
  }
  return out;
}

std::vector<std::vector<int>> vertex_orbits(const std::vector<Permutation>& generators, int n) {
  UnionFind uf(static_cast<std::size_t>(n + 1));
  for (const auto& sigma : generators) {
    for (int v = 1; v <= n; ++v) uf.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(sigma(v)));
  }
  std::map<std::size_t, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[uf.find(static_cast<std::size_t>(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<LinearForm> symmetry_forms(const PairOrbitPartition& orbits) {
  std::vector<LinearForm> out;
  for (const auto& orbit : orbits.orbits) {
    for (std::size_t k = 1; k < orbit.size(); ++k) {
      out.push_back(LinearForm::difference(orbits.n, orbit.front(), orbit[k]));
    }
  }
  return out;
}

}  // namespace recip
