// Acceptance gate: one PASS/FAIL line per criterion, each with its own
// wall-clock budget. --expect-fail pins criteria known to fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "recip/analysis.hpp"
#include "recip/classification.hpp"
#include "recip/graph_io.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/scan.hpp"
#include "recip/symmetry.hpp"
#include "support.hpp"

using namespace recip;
using recip::testing::cycle5;
using recip::testing::lf;
using recip::testing::lfs;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) notes << "; ";
      notes << what;
      ok = false;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

long binom2(long k) { return k * (k - 1) / 2; }

void petersen_pencil(Check& c) {
  FamilySpec spec;
  spec.family = Family::kPetersen;
  AnalysisOptions opts;
  opts.quadratics = true;
  const auto rep = analyze(build_family(spec), opts, spec.label());
  c.expect(rep.pencil.has_value(), "no pencil data");
  if (!rep.pencil) return;
  const auto& p = *rep.pencil;
  c.expect(p.r == 3, "r = " + std::to_string(p.r));
  c.expect(p.deg_reciprocal == 2 && p.mld == 2, "deg/mld");
  c.expect(p.rmld == 3, "rmld");
  c.expect(rep.linear.dimension() == 52, "linear dimension " + std::to_string(rep.linear.dimension()));
  c.expect(rep.quadratic && rep.quadratic->minimal_count == 1, "minimal quadric count");
}

struct CycleRow {
  const char* edges;
  std::vector<std::string> generators;
  std::vector<std::string> extras;  // generators outside the symmetry span
};

const std::vector<CycleRow>& cycle_rows() {
  static const std::vector<CycleRow> rows{
      {"rrrrr",
       {"x11-x55", "x12-x45", "x13-x35", "x22-x55", "x23-x45", "x14-x35", "x33-x55", "x34-x45", "x24-x35",
        "x44-x55", "x15-x45", "x25-x35"},
       {}},
      {"grrrr",
       {"x11-x22", "x15-x23", "x33-x55", "x34-x45", "x13-x25", "x14-x24", "x24+x44-x35-x55"},
       {"x24+x44-x35-x55", "x14+x44-x35-x55"}},
      {"ggrrr",
       {"x11-x33", "x14-x35", "x44-x55", "x15-x34", "x12-x23", "x24-x25", "x13+x34+x55-x33-x35-x45"},
       {"x13+x34+x55-x33-x35-x45"}},
      {"grgrr", {"x11-x44", "x13-x24", "x22-x33", "x15-x45", "x12-x34", "x25-x35"}, {}},
      {"ggyrr", {}, {}},
      {"gryrr", {}, {}},
      // Rotation of "gyrrr": carries the rotated image of its generator.
      {"rgyrr", {"x11+x14-x25-x55"}, {"x11+x14-x25-x55"}},
      {"ggryr", {"x11-x33", "x14-x35", "x44-x55", "x15-x34", "x12-x23", "x24-x25"}, {}},
      {"gyrrr", {"x14+x44-x35-x55"}, {"x14+x44-x35-x55"}},
      {"gyprr", {}, {}},
      {"gyrpr", {}, {}},
      {"gypbr", {}, {}},
  };
  return rows;
}

void coloured_five_cycles(Check& c) {
  for (const auto& row : cycle_rows()) {
    const std::string tag = row.edges;
    const auto g = cycle5(row.edges);
    const Parametrization param(g);
    const auto linear = linear_part(param);
    const auto listed = lfs(row.generators, 5);
    c.expect(same_span(linear.basis, listed, param.indexer()), tag + ": span differs");
    const auto group = automorphism_group(g);
    const auto verdict = classify(linear, pair_orbits(group.generators, 5), component_zero_forms(g));
    c.expect(verdict.induced == row.extras.empty(), tag + ": induced verdict");
    c.expect(verdict.extra_generators.size() == (row.extras.empty() ? 0U : 1U), tag + ": extra count");
    const auto sym = symmetry_forms(pair_orbits(group.generators, 5));
    for (const auto& text : row.extras) {
      const auto f = lf(text, 5);
      c.expect(linear.contains(f), tag + ": " + text + " not in I1");
      c.expect(!same_span(sym, [&] {
                 auto v = sym;
                 v.push_back(f);
                 return v;
               }(), param.indexer()),
               tag + ": " + text + " is a symmetry consequence");
      auto with_extras = sym;
      with_extras.insert(with_extras.end(), verdict.extra_generators.begin(), verdict.extra_generators.end());
      auto with_f = with_extras;
      with_f.push_back(f);
      c.expect(same_span(with_extras, with_f, param.indexer()), tag + ": " + text + " not covered by extras");
    }
  }
}

ColouredGraph distance_coloured_complete(int n) {
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j, "d" + std::to_string(std::min(j - i, n - (j - i))));
  }
  return ColouredGraph::from_labels(n, std::vector<std::string>(static_cast<std::size_t>(n), "v"), edges);
}

void cycle_quadrics(Check& c) {
  const std::vector<std::vector<std::string>> listed{
      {},
      {"x13^2-2*x12^2+x13*x11"},
      {"x13^2-x13*x12-x12^2+x13*x11"},
      {"2*x13^2-x12*x14-x14^2", "2*x12*x13-x11*x14-x13*x14", "2*x12^2-2*x11*x13+x12*x14-x14^2"},
      {"x13^2-x12*x14+x13*x14-x14^2", "x12*x13-x11*x14+x12*x14-x13*x14", "x12^2-x11*x13+x13*x14-x14^2"},
      {"2*x14^2-x13*x15-x15^2", "2*x13*x14-x12*x15-x14*x15", "2*x12*x14-x11*x15-x13*x15", "2*x13^2-x11*x15-x15^2",
       "2*x12*x13-2*x11*x14+x12*x15-x14*x15", "2*x12^2-2*x11*x13+x13*x15-x15^2"},
  };
  for (int n = 3; n <= 8; ++n) {
    const std::string tag = "C_" + std::to_string(n);
    const auto g = recip::testing::family(Family::kCycle, n);
    const Parametrization param(g);
    const auto linear = linear_part(param);
    const auto quad = quadratic_part(param, linear);
    const long r = n / 2 + 1;
    c.expect(static_cast<long>(quad.minimal_count) == binom2(r - 1),
             tag + ": minimal count " + std::to_string(quad.minimal_count));
    const auto& qs = listed[static_cast<std::size_t>(n - 3)];
    c.expect(qs.size() == quad.minimal_count, tag + ": listed count");
    RowSpace reps(linear.pivots.size() * (linear.pivots.size() + 1) / 2);
    for (const auto& q : quad.representatives) reps.insert(reduce_quadratic(linear, q));
    RowSpace listed_span(reps.cols());
    for (const auto& text : qs) {
      const auto q = parse_quadratic_form(text, n);
      c.expect(contains_form(param, q), tag + ": " + text + " not in I2");
      listed_span.insert(reduce_quadratic(linear, q));
    }
    c.expect(listed_span.rank() == quad.minimal_count, tag + ": listed quadrics not minimal generators");
    c.expect(derived_graph(g) == distance_coloured_complete(n), tag + ": derived graph");
  }
}

void closed_form_families(Check& c) {
  std::vector<FamilySpec> specs;
  for (int n = 3; n <= 8; ++n) specs.push_back({Family::kCycle, n, 0, {}, {}});
  for (int n = 2; n <= 7; ++n) specs.push_back({Family::kComplete, n, 0, {}, {}});
  for (int m = 2; m <= 4; ++m) specs.push_back({Family::kCompleteBipartite, m, m, {}, {}});
  for (int m = 2; m <= 4; ++m) specs.push_back({Family::kHyperoctahedral, 0, m, {}, {}});
  for (const auto& spec : specs) {
    const auto v = verify_family(spec);
    c.expect(v.passed(), v.label + " failed");
    c.expect(v.r == v.s, v.label + ": r != s");
  }
}

void bipartite_and_stars(Check& c) {
  std::vector<FamilySpec> specs;
  for (const auto& [m, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    specs.push_back({Family::kCompleteBipartite, n, m, {}, {}});
  }
  for (int n = 4; n <= 7; ++n) specs.push_back({Family::kStar, n, 0, {}, {}});
  for (const auto& spec : specs) {
    const auto v = verify_family(spec);
    const int want_s = spec.family == Family::kStar ? 4 : 5;
    c.expect(v.passed(), v.label + " failed");
    c.expect(v.r == 3 && v.s == want_s, v.label + ": r/s");
    bool saw_det = false;
    for (const auto& clause : v.clauses) saw_det = saw_det || (clause.name == "determinant" && clause.passed);
    c.expect(saw_det, v.label + ": determinant identity");
  }
}

void symmetry_forms_in_ideal(Check& c) {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_int_distribution<int> palette(1, 3);
  for (int k = 0; k < 500; ++k) {
    const auto g = recip::testing::random_graph(rng, size(rng), palette(rng), palette(rng));
    const Parametrization param(g);
    const auto orbits = pair_orbits(automorphism_group(g).generators, g.n());
    for (const auto& f : symmetry_forms(orbits)) {
      c.expect(contains_form(param, f), "graph " + std::to_string(k) + ": " + f.to_string());
    }
    for (const auto& f : component_zero_forms(g)) {
      c.expect(contains_form(param, f), "graph " + std::to_string(k) + ": " + f.to_string());
    }
  }
  for (const auto& name : recip::testing::fixture_names()) {
    const auto g = read_graph_file(recip::testing::fixture_path(name));
    const Parametrization param(g);
    const auto linear = linear_part(param);
    const auto oracle = recip::testing::random_evaluation_kernel(g, rng);
    c.expect(same_span(linear.basis, oracle, param.indexer()), name + ": oracle kernel differs");
  }
}

void conjecture_scans(Check& c) {
  const auto run = [&](const std::string& tag, double budget, const std::function<ScanResult()>& scan) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = scan();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string witnesses;
    for (const auto& ce : res.counterexamples) {
      witnesses += (witnesses.empty() ? " [" : ", ") + ce.witness + " at #" + std::to_string(ce.index);
    }
    if (!witnesses.empty()) witnesses += "]";
    c.expect(res.holds(), tag + ": " + std::to_string(res.counterexamples.size()) + " counterexamples" + witnesses);
    c.expect(res.checked > 0, tag + ": nothing checked");
    c.expect(s < budget, tag + ": " + std::to_string(s) + " s over budget");
  };
  for (int n = 3; n <= 5; ++n) {
    run("cycles n=" + std::to_string(n), 300, [n] { return scan_cycle_binomials(n, VertexColourings::kAll); });
  }
  for (int n = 3; n <= 5; ++n) {
    run("cycles n=" + std::to_string(n) + " one vertex colour", 300,
        [n] { return scan_cycle_binomials(n, VertexColourings::kUniform); });
  }
  for (int n = 3; n <= 8; ++n) {
    run("circulants n=" + std::to_string(n), 60, [n] { return scan_circulants(n); });
  }
}

void positive_control(Check& c) {
  const auto g = read_graph_file(recip::testing::fixture_path("asymmetric_path_with_binomial.json"));
  c.expect(automorphism_group(g).order == 1, "automorphism group not trivial");
  c.expect(linear_part(Parametrization(g)).contains(lf("x13-x24", 4)), "x13-x24 not in I1");
  const auto res = scan_generic({{"marked path", g}}, ScanPredicate::kBinomialsInduced);
  c.expect(res.counterexamples.size() == 1, "scanner did not flag the graph");
  if (!res.counterexamples.empty()) {
    c.expect(res.counterexamples.front().witness == lf("x13-x24", 4).normalized().to_string(),
             "witness " + res.counterexamples.front().witness);
  }
}

void ambient_invariants(Check& c) {
  std::vector<std::pair<std::string, ColouredGraph>> graphs;
  for (const auto& name : recip::testing::fixture_names()) {
    graphs.emplace_back(name, read_graph_file(recip::testing::fixture_path(name)));
  }
  for (const auto& row : cycle_rows()) graphs.emplace_back(row.edges, cycle5(row.edges));
  for (const auto& [name, g] : graphs) {
    const auto a = ambient_reduction(g);
    c.expect(a.dim_L + a.dim_Lperp == a.dim_ambient, name + ": dim L + dim L^perp");
    c.expect(a.L_in_Lprime, name + ": L not in L'");
    c.expect(a.span_full, name + ": span(L', L^perp) not full");
  }
}

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail=<id>,...: criteria known to fail; the exit status is then
  // zero only if exactly those fail, so the documented failure stays pinned.
  std::vector<int> expected_failures;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    const std::string prefix = "--expect-fail=";
    if (!arg.starts_with(prefix)) {
      std::fprintf(stderr, "usage: %s [--expect-fail=<id>[,<id>...]]\n", argv[0]);
      return 2;
    }
    std::istringstream ids(arg.substr(prefix.size()));
    for (std::string id; std::getline(ids, id, ',');) expected_failures.push_back(std::stoi(id));
  }
  const std::vector<Criterion> criteria{
      {1, "Petersen pencil: r=3, 52 linear forms, 1 minimal quadric", 30, petersen_pencil},
      {2, "coloured 5-cycles: linear spans and extra generators", 10, coloured_five_cycles},
      {3, "uniform cycles n=3..8: minimal quadrics and derived graph", 120, cycle_quadrics},
      {4, "cycles, complete, K_{m,m}, hyperoctahedral: r = s and generator spans", 60, closed_form_families},
      {5, "K_{m,n} and stars: r, s, extra generators, determinants", 30, bipartite_and_stars},
      {6, "500 random graphs: symmetry and component-zero forms; oracle kernels", 120, symmetry_forms_in_ideal},
      {7, "binomial scans of 3-, 4-, 5-cycles and circulants n<=8", 360, conjecture_scans},
      {8, "asymmetric marked path is flagged by the binomial scan", 10, positive_control},
      {9, "ambient reduction invariants on fixtures", 10, ambient_invariants},
  };
  int failures = 0;
  std::vector<int> failed;
  for (const auto& crit : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.expect(s < crit.budget_seconds, "over the " + std::to_string(static_cast<int>(crit.budget_seconds)) + " s budget");
    if (!check.ok) {
      ++failures;
      failed.push_back(crit.id);
    }
    std::printf("%s [%d] %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL", crit.id, crit.name, s,
                check.ok ? "" : ": ", check.notes.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  std::sort(expected_failures.begin(), expected_failures.end());
  if (!expected_failures.empty()) {
    std::printf("expected to fail: ");
    for (std::size_t k = 0; k < expected_failures.size(); ++k) std::printf("%s%d", k ? "," : "", expected_failures[k]);
    std::printf("\n");
  }
  return failed == expected_failures ? 0 : 1;
}
