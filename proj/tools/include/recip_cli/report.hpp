#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "recip/analysis.hpp"
#include "recip/classification.hpp"
#include "recip/scan.hpp"

namespace recip::cli {

enum class OutputFormat { kText, kJson, kCsv, kLatex };

OutputFormat output_format_from_string(const std::string& name);

struct RenderOptions {
  OutputFormat format = OutputFormat::kText;
  bool timings = false;  // wall-clock fields make output non-reproducible
};

/// Graph in the input JSON shape, so the echo parses back to the same graph.
nlohmann::json graph_json(const ColouredGraph& g);
nlohmann::json analysis_json(const AnalysisReport& rep, bool timings);
nlohmann::json scan_json(const ScanResult& res, bool timings);
nlohmann::json verification_json(const FamilyVerification& v);

/// LaTeX for a linear form: x_{13} - 2x_{56}.
std::string latex_form(const LinearForm& f);

std::string render_analyses(const std::vector<AnalysisReport>& reports, const RenderOptions& options);
std::string render_scan(const ScanResult& result, const RenderOptions& options);
std::string render_verifications(const std::vector<FamilyVerification>& results, const RenderOptions& options);

}  // namespace recip::cli
