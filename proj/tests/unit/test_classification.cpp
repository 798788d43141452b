#include <random>

#include "doctest.h"
#include "recip/classification.hpp"
#include "recip/errors.hpp"
#include "recip/graph_io.hpp"
#include "recip/pencil.hpp"
#include "support.hpp"

using namespace recip;
using recip::testing::family;
using recip::testing::lf;

TEST_SUITE("classification") {
  TEST_CASE("uniform cycles are induced by symmetries") {
    for (int n = 3; n <= 8; ++n) {
      const auto v = classify(family(Family::kCycle, n));
      CHECK(v.induced);
      CHECK(v.s_equals_r == true);
      CHECK(v.extra_generators.empty());
    }
  }

  TEST_CASE("K_{2,4} needs two extra generators") {
    const auto v = classify(family(Family::kCompleteBipartite, 4, 2));
    CHECK_FALSE(v.induced);
    CHECK(v.extra_generators.size() == 2);
    CHECK(v.r == 3);
    CHECK(v.s == 5);
    CHECK(v.s_equals_r == false);
  }

  TEST_CASE("one marked edge on a 5-cycle has one extra generator") {
    const auto v = classify(recip::testing::cycle5("grrrr"));
    CHECK_FALSE(v.induced);
    CHECK(v.extra_generators.size() == 1);
    CHECK_FALSE(v.r.has_value());
    CHECK(v.dim_symmetry_span == 6);
    CHECK(v.dim_linear_part == 7);
  }

  TEST_CASE("component zeros complete the symmetry span") {
    const auto g = read_graph_file(recip::testing::fixture_path("two_triangles.json"));
    const auto v = classify(g);
    CHECK(v.induced);
    CHECK(v.s == 3);
    CHECK(v.s_within_components == 2);
    CHECK(v.s_equals_r == true);
    CHECK(v.dim_with_component_zeros > v.dim_symmetry_span);
  }

  TEST_CASE("binomial verdicts") {
    const auto g = read_graph_file(recip::testing::fixture_path("asymmetric_path_with_binomial.json"));
    const Parametrization param(g);
    const auto orbits = pair_orbits(automorphism_group(g).generators, 4);
    const auto verdicts = check_binomials(binomial_forms(param), orbits, component_zero_forms(g));
    bool flagged = false;
    for (const auto& v : verdicts) {
      CHECK(v.induced == v.strict);
      if (v.form == lf("x13-x24", 4)) flagged = !v.induced;
    }
    CHECK(flagged);
  }

  TEST_CASE("derived graph of the marked 5-cycle") {
    const auto d = derived_graph(recip::testing::cycle5("grrrr"));
    CHECK(d.edges().size() == 10);
    CHECK(d.num_vertex_colours() == 3);
    CHECK(d.num_edge_colours() == 6);
    CHECK(d.vertex_colour(1) == d.vertex_colour(2));
    CHECK(d.vertex_colour(3) == d.vertex_colour(5));
    CHECK(d.pair_colour(1, 3) == d.pair_colour(2, 5));
    CHECK(d.pair_colour(3, 4) == d.pair_colour(4, 5));
  }

  TEST_CASE("derived graph of a rigid connected graph separates every pair") {
    const auto g = read_graph_file(recip::testing::fixture_path("asymmetric_path_with_binomial.json"));
    const auto d = derived_graph(g);
    CHECK(d.edges().size() == 6);
    CHECK(d.num_vertex_colours() == 4);
    CHECK(d.num_edge_colours() == 6);
  }

  TEST_CASE("derived graph drops cross-component pairs and is idempotent on orbit-coloured graphs") {
    const auto two = read_graph_file(recip::testing::fixture_path("two_triangles.json"));
    CHECK(derived_graph(two).edges().size() == 6);
    for (int n = 3; n <= 7; ++n) {
      const auto d = derived_graph(family(Family::kCycle, n));
      CHECK(derived_graph(d) == d);
    }
  }

  TEST_CASE("ambient reduction of the uniform 5-cycle and K_n") {
    const auto a = ambient_reduction(family(Family::kCycle, 5));
    CHECK(a.dim_ambient == 15);
    CHECK(a.dim_L == 2);
    CHECK(a.dim_Lprime == 3);
    CHECK(a.dim_Lperp == 13);
    CHECK(a.dim_Lperp_prime == 1);
    CHECK(a.L_in_Lprime);
    CHECK(a.span_full);
    const auto k = ambient_reduction(family(Family::kComplete, 5));
    CHECK(k.dim_Lprime == 2);
    CHECK(k.dim_L == 2);
    CHECK(k.dim_Lperp_prime == 0);
  }

  TEST_CASE("family verification") {
    const auto star5 = verify_family({Family::kStar, 5, 0, {}, {}});
    CHECK(star5.passed());
    CHECK(star5.r == 3);
    CHECK(star5.s == 4);
    CHECK(star5.closed_form_generators == std::vector<LinearForm>{lf("x11 - 3*x45 - x55", 5)});
    const auto star6 = verify_family({Family::kStar, 6, 0, {}, {}});
    CHECK(star6.closed_form_generators == std::vector<LinearForm>{lf("x11 - 4*x56 - x66", 6)});
    const auto k24 = verify_family({Family::kCompleteBipartite, 4, 2, {}, {}});
    CHECK(k24.passed());
    CHECK(k24.closed_form_generators.size() == 2);
    CHECK(verify_family({Family::kHyperoctahedral, 0, 3, {}, {}}).passed());
    CHECK_THROWS_AS(verify_family({Family::kCirculant, 6, 0, {1, 2}, {}}), UnsupportedInputError);
  }

  TEST_CASE("induced iff r equals the orbit count, over random uniform graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = recip::testing::random_graph(rng, 2 + trial % 6, 1, 1);
      const auto v = classify(g);
      REQUIRE(v.s_equals_r.has_value());
      CHECK(v.induced == *v.s_equals_r);
    }
  }
}
