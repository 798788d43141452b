#include "recip/analysis.hpp"

#include <chrono>

namespace recip {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& sink) : sink_(sink), start_(Clock::now()) {}

  void lap(const char* stage) {
    const auto now = Clock::now();
    sink_.push_back({stage, std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::vector<StageTiming>& sink_;
  Clock::time_point start_;
};

}  // namespace

AnalysisReport analyze(const ColouredGraph& g, const AnalysisOptions& options, std::string label) {
  AnalysisReport rep;
  rep.label = std::move(label);
  rep.graph = g;
  Stopwatch watch(rep.timings);

  rep.components = connected_components(g);
  rep.group = automorphism_group(g, options.limits);
  rep.orbits = pair_orbits(rep.group.generators, g.n());
  rep.symmetry_forms = symmetry_forms(rep.orbits);
  rep.component_zeros = component_zero_forms(g);
  watch.lap("symmetry");

  const Parametrization param(g, options.limits);
  rep.determinant = param.adjugate().det;
  watch.lap("adjugate");

  rep.linear = linear_part(param);
  rep.binomials = check_binomials(binomial_forms(param), rep.orbits, rep.component_zeros);
  watch.lap("linear");

  if (options.quadratics) {
    rep.quadratic = quadratic_part(param, rep.linear);
    watch.lap("quadratic");
  }

  std::optional<int> r;
  if (g.is_uniform()) {
    rep.segre = segre_symbol(g);
    rep.pencil = pencil_properties_from(g.n(), rep.segre->r());
    r = rep.segre->r();
  }
  rep.verdict = classify(rep.linear, rep.orbits, rep.component_zeros, r);
  rep.derived = derived_graph(g, rep.group.generators);
  rep.ambient = ambient_reduction(g, rep.orbits);
  watch.lap("classification");
  return rep;
}

}  // namespace recip
