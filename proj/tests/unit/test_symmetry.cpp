#include <algorithm>
#include <random>

#include "doctest.h"
#include "recip/errors.hpp"
#include "recip/graph_io.hpp"
#include "recip/symmetry.hpp"
#include "support.hpp"

using namespace recip;
using recip::testing::family;

TEST_SUITE("symmetry") {
  TEST_CASE("permutation algebra") {
    const Permutation a({2, 3, 1});
    const Permutation b({2, 1, 3});
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b)(1) == a(b(1)));
    CHECK(a.to_string() == "(1 2 3)");
    CHECK(Permutation::identity(4).to_string() == "()");
    CHECK(a(VertexPair{1, 3}) == VertexPair{1, 2});
  }

  TEST_CASE("group orders of standard families") {
    CHECK(automorphism_group(family(Family::kCycle, 5)).order == 10);
    CHECK(automorphism_group(family(Family::kCycle, 8)).order == 16);
    CHECK(automorphism_group(family(Family::kComplete, 6)).order == 720);
    CHECK(automorphism_group(family(Family::kCompleteBipartite, 4, 2)).order == 48);
    CHECK(automorphism_group(family(Family::kHyperoctahedral, 0, 3)).order == 48);
    FamilySpec petersen;
    petersen.family = Family::kPetersen;
    CHECK(automorphism_group(build_family(petersen)).order == 120);
  }

  TEST_CASE("colours restrict the group") {
    const auto g = read_graph_file(recip::testing::fixture_path("asymmetric_path_with_binomial.json"));
    const auto group = automorphism_group(g);
    CHECK(group.order == 1);
    CHECK(group.generators.empty());
    CHECK(automorphisms(g) == std::vector<Permutation>{Permutation::identity(4)});
    CHECK(automorphism_group(recip::testing::cycle5("grrrr")).order == 2);
  }

  TEST_CASE("Lagrange: orbit sizes divide the group order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = recip::testing::random_graph(rng, 3 + trial % 4, 2, 2);
      const auto group = automorphism_group(g);
      const auto elements = automorphisms(g);
      CHECK(Integer(static_cast<unsigned long>(elements.size())) == group.order);
      for (const auto& sigma : elements) CHECK(is_automorphism(g, sigma));
      for (const auto& orbit : pair_orbits(group.generators, g.n()).orbits) {
        CHECK(group.order % static_cast<unsigned long>(orbit.size()) == 0);
      }
      for (const auto& orbit : vertex_orbits(group.generators, g.n())) {
        CHECK(group.order % static_cast<unsigned long>(orbit.size()) == 0);
      }
    }
  }

  TEST_CASE("pair orbits of uniform cycles") {
    CHECK(pair_orbits(automorphism_group(family(Family::kCycle, 5)).generators, 5).s() == 3);
    const auto c6 = pair_orbits(automorphism_group(family(Family::kCycle, 6)).generators, 6);
    CHECK(c6.s() == 4);
    CHECK(c6.orbit_index({1, 1}) == 0);
    CHECK(c6.orbit_index({1, 4}) == c6.orbit_index({3, 6}));
    CHECK(symmetry_forms(c6).size() == 21 - 4);
  }

  TEST_CASE("symmetry forms are differences within one orbit") {
    const auto orbits = pair_orbits(automorphism_group(family(Family::kCycle, 4)).generators, 4);
    for (const auto& f : symmetry_forms(orbits)) {
      REQUIRE(f.size() == 2);
      const auto p = f.terms().begin()->first;
      const auto q = std::next(f.terms().begin())->first;
      CHECK(orbits.orbit_index(p) == orbits.orbit_index(q));
    }
  }

  TEST_CASE("caps are enforced") {
    Limits tight;
    tight.max_group_elements = 100;
    CHECK_THROWS_AS(automorphisms(family(Family::kComplete, 6), tight), ResourceCapError);
    tight.max_n = 4;
    CHECK_THROWS_AS(automorphism_group(family(Family::kCycle, 5), tight), ResourceCapError);
  }
}
