#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "recip/classification.hpp"
#include "recip/graph_io.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/symmetry.hpp"
#include "support.hpp"

using namespace recip;

TEST_SUITE("properties") {
  TEST_CASE("linear part agrees with the random-evaluation oracle") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<int> palette(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = recip::testing::random_graph(rng, size(rng), palette(rng), palette(rng));
      const Parametrization param(g);
      const auto linear = linear_part(param);
      CHECK(same_span(linear.basis, recip::testing::random_evaluation_kernel(g, rng), param.indexer()));
    }
  }

  TEST_CASE("symmetry forms, component zeros and binomials lie in the linear part") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 80; ++trial) {
      const auto g = recip::testing::random_graph(rng, 1 + trial % 7, 2, 3);
      const Parametrization param(g);
      const auto linear = linear_part(param);
      const auto orbits = pair_orbits(automorphism_group(g).generators, g.n());
      for (const auto& f : symmetry_forms(orbits)) CHECK(linear.contains(f));
      for (const auto& f : component_zero_forms(g)) CHECK(linear.contains(f));
      for (const auto& f : binomial_forms(param)) CHECK(contains_form(param, f));
      for (const auto& f : linear.basis) CHECK(contains_form(param, f));
    }
  }

  TEST_CASE("relabelling vertices conjugates the linear part") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + trial % 4;
      const auto g = recip::testing::random_graph(rng, n, 2, 2);
      std::vector<int> image(static_cast<std::size_t>(n));
      std::iota(image.begin(), image.end(), 1);
      std::shuffle(image.begin(), image.end(), rng);
      const Permutation sigma(image);
      std::vector<std::string> colours(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) colours[static_cast<std::size_t>(sigma(v) - 1)] = "c" + std::to_string(g.vertex_colour(v));
      std::vector<std::tuple<int, int, std::string>> edges;
      for (const auto& e : g.edges()) edges.emplace_back(sigma(e.u), sigma(e.v), "c" + std::to_string(e.colour));
      const auto h = ColouredGraph::from_labels(n, colours, edges);
      const auto lg = linear_part(Parametrization(g));
      const auto lh = linear_part(Parametrization(h));
      std::vector<LinearForm> moved;
      for (const auto& f : lg.basis) {
        LinearForm m(n);
        for (const auto& [p, c] : f.terms()) m.add(sigma(p), c);
        moved.push_back(m);
      }
      CHECK(same_span(moved, lh.basis, PairIndexer(n)));
    }
  }

  TEST_CASE("ambient invariants on fixtures and random graphs") {
    std::vector<ColouredGraph> graphs;
    for (const auto& name : recip::testing::fixture_names()) {
      graphs.push_back(read_graph_file(recip::testing::fixture_path(name)));
    }
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 30; ++trial) graphs.push_back(recip::testing::random_graph(rng, 1 + trial % 6, 2, 2));
    for (const auto& g : graphs) {
      const auto a = ambient_reduction(g);
      CHECK(a.dim_L + a.dim_Lperp == a.dim_ambient);
      CHECK(a.L_in_Lprime);
      CHECK(a.span_full);
      CHECK(a.dim_Lperp_prime <= a.dim_Lprime);
    }
  }
}
