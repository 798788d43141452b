#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recip/classification.hpp"
#include "recip/graph.hpp"
#include "recip/limits.hpp"
#include "recip/pencil.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/symmetry.hpp"

namespace recip {

struct AnalysisOptions {
  bool quadratics = false;
  Limits limits;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

/// Everything computed for one coloured graph.
struct AnalysisReport {
  std::string label;
  ColouredGraph graph;
  std::vector<std::vector<int>> components;
  AutomorphismGroup group;
  PairOrbitPartition orbits;
  std::vector<LinearForm> symmetry_forms;
  std::vector<LinearForm> component_zeros;
  MultiPoly determinant;
  LinearPart linear;
  std::optional<QuadraticPart> quadratic;
  std::vector<BinomialVerdict> binomials;
  SymmetryVerdict verdict;
  ColouredGraph derived;
  AmbientReduction ambient;
  std::optional<SegreSymbol> segre;        // uniform graphs only
  std::optional<PencilProperties> pencil;  // uniform graphs only
  std::vector<StageTiming> timings;
};

AnalysisReport analyze(const ColouredGraph& g, const AnalysisOptions& options = {}, std::string label = {});

}  // namespace recip
