// recip: coloured-graph analyses, conjecture scans and family checks.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation/unsupported input
// (including corrupt checkpoints), 3 resource cap, 4 a verification
// failed or a scan found counterexamples, 5 I/O, 6 internal error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recip/analysis.hpp"
#include "recip/classification.hpp"
#include "recip/errors.hpp"
#include "recip/graph_io.hpp"
#include "recip/scan.hpp"
#include "recip_cli/report.hpp"
#include "recip_cli/settings.hpp"

#ifndef RECIP_VERSION
#define RECIP_VERSION "unknown"
#endif

namespace {

using namespace recip;
using namespace recip::cli;

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kCap = 3, kFailed = 4, kIo = 5, kInternal = 6 };

struct GlobalFlags {
  std::string config;
  bool allow_large = false;
  std::optional<int> max_n;
  std::optional<unsigned> jobs;
};

struct OutputFlags {
  std::string format = "text";
  std::string out;
  bool timings = false;
};

struct FamilyFlags {
  std::string family;
  int n = 0;
  int m = 0;
  std::vector<int> connection_set;
  std::vector<std::string> edges;
};

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to this file instead of standard output");
  cmd->add_flag("--timings", o.timings, "Include wall-clock timings (output is then not reproducible)");
}

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family,
                  "cycle | complete | complete_bipartite | hyperoctahedral | star | circulant | petersen | uniform-of");
  cmd->add_option("--n", f.n, "Family size parameter n");
  cmd->add_option("--m", f.m, "Family parameter m");
  cmd->add_option("--S", f.connection_set, "Circulant connection set, e.g. 1,2")->delimiter(',');
  cmd->add_option("--edges", f.edges, "uniform-of edge list, e.g. 1-2,2-3")->delimiter(',');
}

FamilySpec family_spec(const FamilyFlags& f) {
  FamilySpec spec;
  spec.family = family_from_string(f.family);
  spec.n = f.n;
  spec.m = f.m;
  spec.connection_set = f.connection_set;
  for (const auto& e : f.edges) {
    const auto dash = e.find('-');
    if (dash == std::string::npos) throw ParseError(0, "--edges", "expected u-v, got '" + e + "'");
    try {
      spec.edge_list.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ParseError(0, "--edges", "expected u-v, got '" + e + "'");
    }
  }
  return spec;
}

Settings settings_for(const GlobalFlags& g) {
  SettingsLayer config;
  if (!g.config.empty()) config = load_config_file(g.config);
  const SettingsLayer env = settings_from_environment([](const char* name) { return std::getenv(name); });
  SettingsLayer flags = g.allow_large ? large_caps() : SettingsLayer{};
  if (g.max_n) flags.max_n = g.max_n;
  if (g.jobs) flags.jobs = g.jobs;
  if (g.allow_large) std::cerr << "recip: warning: size caps lifted; exact computations may take very long\n";
  return resolve(config, env, flags);
}

void emit(const std::string& text, const OutputFlags& o) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error("cannot write to standard output");
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open output file '" + o.out + "'");
  file << text;
  if (!file) throw Error("cannot write output file '" + o.out + "'");
}

RenderOptions render_options(const OutputFlags& o) { return {output_format_from_string(o.format), o.timings}; }

// Files named directly, plus every .json/.txt file inside named directories
// (sorted, so scans over a directory are reproducible).
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    if (std::filesystem::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& entry : std::filesystem::directory_iterator(in)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".txt")) found.push_back(entry.path().string());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

class Progress {
 public:
  explicit Progress(bool enabled) : enabled_(enabled) {}

  void operator()(std::uint64_t done, std::uint64_t total) {
    if (!enabled_) return;
    const auto now = std::chrono::steady_clock::now();
    if (done < total && now - last_ < std::chrono::seconds(1)) return;
    last_ = now;
    std::cerr << "progress " << done << "/" << total << "\n";
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_{};
};

std::vector<FamilySpec> all_covered_families() {
  std::vector<FamilySpec> specs;
  for (int n = 3; n <= 8; ++n) specs.push_back({Family::kCycle, n, 0, {}, {}});
  for (int n = 2; n <= 7; ++n) specs.push_back({Family::kComplete, n, 0, {}, {}});
  for (int m = 2; m <= 4; ++m) specs.push_back({Family::kCompleteBipartite, m, m, {}, {}});
  for (int m = 2; m <= 4; ++m) specs.push_back({Family::kHyperoctahedral, 0, m, {}, {}});
  for (const auto& [m, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    specs.push_back({Family::kCompleteBipartite, n, m, {}, {}});
  }
  for (int n = 4; n <= 7; ++n) specs.push_back({Family::kStar, n, 0, {}, {}});
  return specs;
}

const char* const kFamiliesText =
    "cycle              --n N (N >= 3)        C_N, edges (i, i+1 mod N)\n"
    "complete           --n N                 K_N\n"
    "complete_bipartite --m M --n N (M <= N)  K_{M,N}; parts {1..M}, {M+1..M+N}; K_{M,M} split by parity\n"
    "hyperoctahedral    --m M                 K_{2M} minus the matching (2k-1, 2k)\n"
    "star               --n N                 K_{1,N-1} with hub 1\n"
    "circulant          --n N --S s1,s2,...   edges (i, i+s mod N), s in 1..N/2\n"
    "petersen                                 Petersen graph\n"
    "uniform-of         --n N --edges u-v,... any edge set with uniform colours\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear and quadratic parts of reciprocal ideals of coloured graphs", "recip"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  app.add_option("--config", global.config, "JSON config file with size caps and jobs");
  app.add_flag("--allow-large", global.allow_large, "Lift the default size caps");
  app.add_option("--max-n", global.max_n, "Largest graph size accepted (default 12)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze coloured graphs from files or a named family");
  std::vector<std::string> analyze_inputs;
  FamilyFlags analyze_family;
  OutputFlags analyze_out;
  bool quadratics = false;
  analyze_cmd->add_option("inputs", analyze_inputs, "Graph files (.json or text format) or directories");
  add_family_flags(analyze_cmd, analyze_family);
  analyze_cmd->add_flag("--quadratics", quadratics, "Also compute the degree-2 part");
  add_output_flags(analyze_cmd, analyze_out);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive conjecture scans");
  scan_cmd->require_subcommand(1);
  OutputFlags scan_out;
  std::string checkpoint;
  std::uint64_t stop_after = 0;
  std::uint64_t chunk = 256;
  bool quiet = false;
  auto add_scan_flags = [&](CLI::App* cmd) {
    add_output_flags(cmd, scan_out);
    cmd->add_option("--jobs", global.jobs, "Worker threads (default: logical cores)");
    cmd->add_option("--checkpoint", checkpoint, "Resume from and update this checkpoint file");
    cmd->add_option("--stop-after", stop_after, "Stop after this many items (checkpoint to resume)");
    cmd->add_option("--chunk", chunk, "Items per checkpoint chunk")->capture_default_str();
    cmd->add_flag("--quiet", quiet, "No progress on standard error");
  };
  auto* cycles_cmd = scan_cmd->add_subcommand("cycles", "Binomials of every colouring of C_n");
  int cycles_n = 0;
  bool one_vertex_colour = false;
  bool no_reduction = false;
  cycles_cmd->add_option("--n", cycles_n, "Cycle length")->required();
  cycles_cmd->add_flag("--uniform-vertices", one_vertex_colour, "Only colourings with one vertex colour");
  cycles_cmd->add_flag("--no-symmetry-reduction", no_reduction, "Check every colouring, not one per dihedral class");
  add_scan_flags(cycles_cmd);
  auto* circulants_cmd = scan_cmd->add_subcommand("circulants", "r = s for every uniform circulant on n vertices");
  int circulants_n = 0;
  circulants_cmd->add_option("--n", circulants_n, "Number of vertices")->required();
  add_scan_flags(circulants_cmd);
  auto* fixtures_cmd = scan_cmd->add_subcommand("fixtures", "Apply a predicate to graph files");
  std::vector<std::string> fixture_inputs;
  std::string predicate = "binomials-induced";
  fixtures_cmd->add_option("inputs", fixture_inputs, "Graph files or directories")->required();
  fixtures_cmd->add_option("--predicate", predicate, "binomials-induced | r-equals-s | pencil-formulas")
      ->capture_default_str();
  add_scan_flags(fixtures_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check closed-form claims for a graph family");
  FamilyFlags verify_family_flags;
  OutputFlags verify_out;
  bool verify_all = false;
  add_family_flags(verify_cmd, verify_family_flags);
  verify_cmd->add_flag("--all", verify_all, "Every covered family at the tabulated sizes");
  add_output_flags(verify_cmd, verify_out);

  app.add_subcommand("families", "List family constructors");
  app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Settings settings = settings_for(global);

    if (app.got_subcommand("version")) {
      std::cout << "recip " << RECIP_VERSION << "\n";
      return kOk;
    }
    if (app.got_subcommand("families")) {
      std::cout << kFamiliesText;
      return kOk;
    }

    if (analyze_cmd->parsed()) {
      const bool by_family = !analyze_family.family.empty();
      if (by_family == !analyze_inputs.empty()) {
        std::cerr << "recip: error: analyze needs either input files or --family\n";
        return kUsage;
      }
      AnalysisOptions opts;
      opts.quadratics = quadratics;
      opts.limits = settings.limits;
      std::vector<AnalysisReport> reports;
      if (by_family) {
        const FamilySpec spec = family_spec(analyze_family);
        reports.push_back(analyze(build_family(spec), opts, spec.label()));
      } else {
        for (const auto& path : expand_inputs(analyze_inputs)) {
          reports.push_back(analyze(read_graph_file(path), opts, path));
        }
      }
      emit(render_analyses(reports, render_options(analyze_out)), analyze_out);
      return kOk;
    }

    if (scan_cmd->parsed()) {
      ScanOptions opts;
      opts.jobs = settings.jobs;
      opts.checkpoint_path = checkpoint;
      opts.stop_after = stop_after;
      opts.chunk_size = chunk;
      opts.limits = settings.limits;
      Progress progress(!quiet);
      opts.progress = [&progress](std::uint64_t done, std::uint64_t total) { progress(done, total); };
      ScanResult result;
      if (cycles_cmd->parsed()) {
        opts.reduce_by_symmetry = !no_reduction;
        result = scan_cycle_binomials(cycles_n, one_vertex_colour ? VertexColourings::kUniform : VertexColourings::kAll,
                                      opts);
      } else if (circulants_cmd->parsed()) {
        result = scan_circulants(circulants_n, opts);
      } else {
        std::vector<NamedGraph> graphs;
        for (const auto& path : expand_inputs(fixture_inputs)) graphs.push_back({path, read_graph_file(path)});
        result = scan_generic(graphs, scan_predicate_from_string(predicate), opts);
      }
      emit(render_scan(result, render_options(scan_out)), scan_out);
      const bool complete = result.checked + result.skipped == result.universe_size;
      if (!complete) std::cerr << "recip: scan stopped early; resume with the same --checkpoint\n";
      return result.holds() ? kOk : kFailed;
    }

    if (verify_cmd->parsed()) {
      if (verify_all == !verify_family_flags.family.empty()) {
        std::cerr << "recip: error: verify needs either --family or --all\n";
        return kUsage;
      }
      std::vector<FamilyVerification> results;
      const auto specs = verify_all ? all_covered_families() : std::vector<FamilySpec>{family_spec(verify_family_flags)};
      for (const auto& spec : specs) results.push_back(verify_family(spec, settings.limits));
      emit(render_verifications(results, render_options(verify_out)), verify_out);
      const bool passed = std::all_of(results.begin(), results.end(), [](const auto& v) { return v.passed(); });
      return passed ? kOk : kFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "recip: parse error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "recip: invalid input (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInput;
  } catch (const UnsupportedInputError& e) {
    std::cerr << "recip: unsupported input: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceCapError& e) {
    std::cerr << "recip: resource cap: " << e.what() << " (raise with --allow-large, --max-n or RECIP_MAX_N)\n";
    return kCap;
  } catch (const DimensionError& e) {
    std::cerr << "recip: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InternalError& e) {
    std::cerr << "recip: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "recip: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "recip: I/O error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
