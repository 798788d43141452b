#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "recip/errors.hpp"
#include "recip/graph_io.hpp"
#include "recip/scan.hpp"
#include "recip/set_partitions.hpp"
#include "support.hpp"

using namespace recip;

namespace {

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("recip-test-" + stem)).string();
}

std::vector<std::string> witnesses(const ScanResult& r) {
  std::vector<std::string> out;
  for (const auto& c : r.counterexamples) out.push_back(std::to_string(c.index) + ":" + c.witness);
  return out;
}

}  // namespace

TEST_SUITE("conjecture-scan") {
  TEST_CASE("set partitions are counted by Bell numbers") {
    for (int n = 0; n <= 7; ++n) {
      CHECK(Integer(static_cast<unsigned long>(set_partitions(n).size())) == bell_number(n));
    }
    CHECK(bell_number(10) == 115975);
    CHECK(set_partitions(3).back() == Rgs{0, 1, 2});
    CHECK(canonical_rgs({7, 3, 7, 9}) == Rgs{0, 1, 0, 2});
  }

  TEST_CASE("dihedral canonical form is invariant under rotation and reflection") {
    const Rgs v{0, 0, 1, 0, 1};
    const Rgs e{0, 1, 1, 2, 0};
    const auto canon = dihedral_canonical(v, e);
    CHECK(coloured_cycle(v, e).n() == 5);
    // Rotating by one vertex moves edge k to edge k+1.
    const Rgs v_rot = canonical_rgs({v[4], v[0], v[1], v[2], v[3]});
    const Rgs e_rot = canonical_rgs({e[4], e[0], e[1], e[2], e[3]});
    CHECK(dihedral_canonical(v_rot, e_rot) == canon);
  }

  TEST_CASE("uniform 3-cycle scan") {
    const auto r = scan_cycle_binomials(3, VertexColourings::kUniform);
    CHECK(r.holds());
    CHECK(r.universe_size == 5);
    CHECK(r.checked + r.skipped == r.universe_size);
    CHECK(r.scan_id == "cycles-n3-uniform-dihedral");
  }

  TEST_CASE("4-cycles with alternating vertex colours carry an unexplained binomial") {
    const auto r = scan_cycle_binomials(4, VertexColourings::kAll);
    CHECK(r.universe_size == 225);
    CHECK(witnesses(r) == std::vector<std::string>{"91:x12 - x34", "97:x12 - x34"});
    CHECK(scan_cycle_binomials(4, VertexColourings::kUniform).holds());
    CHECK(scan_cycle_binomials(5, VertexColourings::kUniform).holds());
  }

  TEST_CASE("symmetry reduction does not change the verdict") {
    ScanOptions full;
    full.reduce_by_symmetry = false;
    const auto unreduced = scan_cycle_binomials(4, VertexColourings::kAll, full);
    const auto reduced = scan_cycle_binomials(4, VertexColourings::kAll);
    CHECK(unreduced.checked == 225);
    CHECK(unreduced.skipped == 0);
    CHECK(unreduced.holds() == reduced.holds());
    // Every unreduced counterexample is a relabelling of a reduced one.
    std::set<std::size_t> reduced_classes;
    for (const auto& c : reduced.counterexamples) reduced_classes.insert(c.index);
    const auto vertex = set_partitions(4);
    const auto edge = set_partitions(4);
    const std::size_t b = edge.size();
    for (const auto& c : unreduced.counterexamples) {
      const auto [cv, ce] = dihedral_canonical(vertex[c.index / b], edge[c.index % b]);
      const auto pos_v = std::find(vertex.begin(), vertex.end(), cv) - vertex.begin();
      const auto pos_e = std::find(edge.begin(), edge.end(), ce) - edge.begin();
      CHECK(reduced_classes.count(static_cast<std::size_t>(pos_v) * b + static_cast<std::size_t>(pos_e)) == 1);
    }
  }

  TEST_CASE("scan results do not depend on the worker count") {
    ScanOptions one;
    one.jobs = 1;
    ScanOptions many;
    many.jobs = 4;
    many.chunk_size = 7;
    const auto a = scan_cycle_binomials(5, VertexColourings::kAll, one);
    const auto b = scan_cycle_binomials(5, VertexColourings::kAll, many);
    CHECK(a.checked == b.checked);
    CHECK(a.skipped == b.skipped);
    CHECK(witnesses(a) == witnesses(b));
  }

  TEST_CASE("checkpoint and resume reproduce the full run") {
    const std::string path = temp_path("resume.ckpt");
    std::remove(path.c_str());
    ScanOptions opts;
    opts.checkpoint_path = path;
    opts.chunk_size = 16;
    opts.stop_after = 100;
    const auto partial = scan_cycle_binomials(4, VertexColourings::kAll, opts);
    CHECK(partial.checked + partial.skipped == 100);
    {
      std::ifstream in(path);
      std::string id;
      std::uint64_t universe = 0;
      std::uint64_t next = 0;
      in >> id >> universe >> next;
      CHECK(id == "cycles-n4-all-dihedral");
      CHECK(universe == 225);
      CHECK(next == 100);
    }
    opts.stop_after = 0;
    const auto resumed = scan_cycle_binomials(4, VertexColourings::kAll, opts);
    const auto fresh = scan_cycle_binomials(4, VertexColourings::kAll);
    CHECK(resumed.checked == fresh.checked);
    CHECK(resumed.skipped == fresh.skipped);
    CHECK(witnesses(resumed) == witnesses(fresh));
    // A checkpoint from another scan is refused.
    CHECK_THROWS_AS(scan_cycle_binomials(5, VertexColourings::kAll, opts), ParseError);
    std::remove(path.c_str());
  }

  TEST_CASE("corrupt checkpoints are rejected") {
    const std::string path = temp_path("corrupt.ckpt");
    {
      std::ofstream out(path);
      out << "cycles-n3-all-dihedral 25 3\n{\"index\": \"x\"}\n";
    }
    ScanOptions opts;
    opts.checkpoint_path = path;
    CHECK_THROWS_AS(scan_cycle_binomials(3, VertexColourings::kAll, opts), ParseError);
    std::remove(path.c_str());
  }

  TEST_CASE("circulant scans") {
    const auto six = scan_circulants(6);
    CHECK(six.universe_size == 7);
    CHECK(six.checked == 7);
    CHECK(six.holds());
    CHECK(scan_circulants(5).holds());
    const auto ten = scan_circulants(10);
    REQUIRE(ten.counterexamples.size() == 4);
    CHECK(ten.counterexamples.front().subject == "circulant(10;1,2)");
    CHECK(ten.counterexamples.front().witness == "r=5 s=6");
    CHECK_THROWS_AS(scan_circulants(11), ResourceCapError);
    CHECK_THROWS_AS(scan_cycle_binomials(2, VertexColourings::kAll), ValidationError);
    CHECK_THROWS_AS(scan_cycle_binomials(7, VertexColourings::kAll), ResourceCapError);
  }

  TEST_CASE("generic scans") {
    CHECK(scan_generic({}, ScanPredicate::kREqualsS).checked == 0);
    const auto marked = read_graph_file(recip::testing::fixture_path("asymmetric_path_with_binomial.json"));
    const auto flagged = scan_generic({{"marked path", marked}}, ScanPredicate::kBinomialsInduced);
    REQUIRE(flagged.counterexamples.size() == 1);
    CHECK(flagged.counterexamples[0].witness == "x13 - x24");
    CHECK(flagged.counterexamples[0].subject == "marked path");
    std::vector<NamedGraph> uniform;
    for (int n = 3; n <= 6; ++n) uniform.push_back({"C_" + std::to_string(n), recip::testing::family(Family::kCycle, n)});
    uniform.push_back({"K_{2,3}", recip::testing::family(Family::kCompleteBipartite, 3, 2)});
    CHECK(scan_generic(uniform, ScanPredicate::kPencilFormulas).holds());
    const auto rs = scan_generic(uniform, ScanPredicate::kREqualsS);
    REQUIRE(rs.counterexamples.size() == 1);
    CHECK(rs.counterexamples[0].subject == "K_{2,3}");
    CHECK(scan_predicate_from_string("r-equals-s") == ScanPredicate::kREqualsS);
    CHECK_THROWS_AS(scan_predicate_from_string("nope"), ValidationError);
  }
}
