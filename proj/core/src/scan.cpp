#include "recip/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "recip/classification.hpp"
#include "recip/errors.hpp"
#include "recip/graph_io.hpp"
#include "recip/pencil.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/set_partitions.hpp"
#include "recip/symmetry.hpp"

namespace recip {

namespace {

struct Outcome {
  bool skipped = false;
  bool failed = false;
  bool strict_exception = false;
  Counterexample example;
};

using Evaluator = std::function<Outcome(std::uint64_t)>;
using SkipTest = std::function<bool(std::uint64_t)>;

struct Checkpoint {
  std::uint64_t next_index = 0;
  std::uint64_t strict_exceptions = 0;
  std::vector<Counterexample> counterexamples;
};

Checkpoint read_checkpoint(const std::string& path, const std::string& scan_id, std::uint64_t universe) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;  // fresh start
  std::string header;
  if (!std::getline(in, header)) return cp;  // empty file: fresh start
  std::istringstream fields(header);
  std::string id;
  std::uint64_t size = 0;
  std::string extra;
  if (!(fields >> id >> size >> cp.next_index) || (fields >> extra)) {
    throw ParseError(1, "checkpoint", "expected 'scan-id universe-size next-index'");
  }
  if (id != scan_id || size != universe) {
    throw ParseError(1, "checkpoint", "checkpoint belongs to scan '" + id + "' (" + std::to_string(size) +
                                          " items), not '" + scan_id + "'");
  }
  if (cp.next_index > universe) throw ParseError(1, "checkpoint", "next-index beyond the universe");
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      if (j.contains("strict_exceptions")) {
        cp.strict_exceptions = j.at("strict_exceptions").get<std::uint64_t>();
        continue;
      }
      cp.counterexamples.push_back(
          {j.at("index").get<std::uint64_t>(), j.at("subject").get<std::string>(), j.at("witness").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, "checkpoint", e.what());
    }
    if (cp.counterexamples.size() && cp.counterexamples.back().index >= cp.next_index) {
      throw ParseError(line_no, "checkpoint", "counterexample index beyond next-index");
    }
  }
  return cp;
}

void write_checkpoint(const std::string& path, const std::string& scan_id, std::uint64_t universe,
                      std::uint64_t next_index, std::uint64_t strict_exceptions,
                      const std::vector<Counterexample>& examples) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint '" + tmp + "'");
    out << scan_id << " " << universe << " " << next_index << "\n";
    out << nlohmann::json{{"strict_exceptions", strict_exceptions}}.dump() << "\n";
    for (const auto& c : examples) {
      out << nlohmann::json{{"index", c.index}, {"subject", c.subject}, {"witness", c.witness}}.dump() << "\n";
    }
  }
  std::rename(tmp.c_str(), path.c_str());
}

ScanResult run_scan(const std::string& scan_id, const std::string& description, std::uint64_t universe,
                    const Evaluator& evaluate, const SkipTest& skip, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanResult result;
  result.scan_id = scan_id;
  result.description = description;
  result.universe_size = universe;

  std::uint64_t next = 0;
  if (!options.checkpoint_path.empty()) {
    Checkpoint cp = read_checkpoint(options.checkpoint_path, scan_id, universe);
    next = cp.next_index;
    result.counterexamples = std::move(cp.counterexamples);
    result.strict_exceptions = cp.strict_exceptions;
    for (std::uint64_t k = 0; k < next; ++k) {
      if (skip(k)) {
        ++result.skipped;
      } else {
        ++result.checked;
      }
    }
  }

  unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
  const std::uint64_t stop = options.stop_after ? std::min(universe, next + options.stop_after) : universe;

  while (next < stop) {
    const std::uint64_t end = std::min(stop, next + chunk);
    std::vector<Outcome> outcomes(end - next);
    std::atomic<std::uint64_t> cursor{next};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::uint64_t k = cursor.fetch_add(1);
        if (k >= end) return;
        try {
          outcomes[k - next] = skip(k) ? Outcome{true, false, false, {}} : evaluate(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          cursor = end;
        }
      }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, end - next));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    for (std::uint64_t k = next; k < end; ++k) {
      const Outcome& o = outcomes[k - next];
      if (o.skipped) {
        ++result.skipped;
        continue;
      }
      ++result.checked;
      if (o.strict_exception) ++result.strict_exceptions;
      if (o.failed) {
        Counterexample c = o.example;
        c.index = k;
        result.counterexamples.push_back(std::move(c));
      }
    }
    next = end;
    if (!options.checkpoint_path.empty()) {
      write_checkpoint(options.checkpoint_path, scan_id, universe, next, result.strict_exceptions,
                       result.counterexamples);
    }
    if (options.progress) options.progress(next, universe);
  }
  std::sort(result.counterexamples.begin(), result.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// Binomials of I₁ against the symmetries of g.
Outcome binomial_outcome(const ColouredGraph& g, const Limits& limits) {
  const Parametrization param(g, limits);
  const auto group = automorphism_group(g, limits);
  const auto verdicts =
      check_binomials(binomial_forms(param), pair_orbits(group.generators, g.n()), component_zero_forms(g));
  Outcome o;
  for (const auto& v : verdicts) {
    if (!v.induced && !o.failed) {
      o.failed = true;
      o.example.witness = v.form.to_string();
    }
    if (v.induced && !v.strict) o.strict_exception = true;
  }
  if (o.failed) o.example.subject = to_json(g);
  return o;
}

Outcome r_equals_s_outcome(const ColouredGraph& g, const Limits& limits) {
  // Disconnected circulants: cross-component orbits are zero forms, so
  // they are not counted against r.
  const int r = pencil_properties(g).r;
  const auto orbits = pair_orbits(automorphism_group(g, limits).generators, g.n());
  const PairIndexer idx(g.n());
  RowSpace space(idx.size());
  for (const auto& f : symmetry_forms(orbits)) space.insert(f.to_vector(idx));
  for (const auto& f : component_zero_forms(g)) space.insert(f.to_vector(idx));
  const std::size_t s = idx.size() - space.rank();
  Outcome o;
  if (static_cast<std::size_t>(r) != s) {
    o.failed = true;
    o.example.witness = "r=" + std::to_string(r) + " s=" + std::to_string(s);
  }
  return o;
}

Outcome pencil_formulas_outcome(const ColouredGraph& g, const Limits& limits) {
  const PencilProperties expected = pencil_properties(g);
  const Parametrization param(g, limits);
  const LinearPart linear = linear_part(param);
  const QuadraticPart quadratic = quadratic_part(param, linear);
  Outcome o;
  if (static_cast<long>(linear.dimension()) != expected.n_linear ||
      static_cast<long>(quadratic.minimal_count) != expected.n_quadratic) {
    o.failed = true;
    o.example.witness = "linear " + std::to_string(linear.dimension()) + " vs " +
                        std::to_string(expected.n_linear) + ", quadratic " +
                        std::to_string(quadratic.minimal_count) + " vs " + std::to_string(expected.n_quadratic);
  }
  return o;
}

}  // namespace

ColouredGraph coloured_cycle(const std::vector<int>& vertex_blocks, const std::vector<int>& edge_blocks) {
  const int n = static_cast<int>(vertex_blocks.size());
  if (n < 3 || edge_blocks.size() != vertex_blocks.size()) {
    throw ValidationError(ValidationKind::kInvalidParameter, "a coloured cycle needs n >= 3 vertex and edge blocks");
  }
  std::vector<std::string> vertex_labels;
  for (int b : vertex_blocks) vertex_labels.push_back("v" + std::to_string(b));
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int k = 0; k < n; ++k) edges.emplace_back(k + 1, (k + 1) % n + 1, "e" + std::to_string(edge_blocks[static_cast<std::size_t>(k)]));
  return ColouredGraph::from_labels(n, vertex_labels, edges);
}

std::pair<std::vector<int>, std::vector<int>> dihedral_canonical(const std::vector<int>& vertex_blocks,
                                                                 const std::vector<int>& edge_blocks) {
  const int n = static_cast<int>(vertex_blocks.size());
  std::pair<std::vector<int>, std::vector<int>> best{canonical_rgs(vertex_blocks), canonical_rgs(edge_blocks)};
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int t = 0; t < n; ++t) {
      for (int i = 0; i < n; ++i) {
        // Vertex i ↦ σ(i); edge {i, i+1} ↦ the edge between their images.
        const int image = reflect ? ((t - i) % n + n) % n : (i + t) % n;
        const int edge = reflect ? ((t - i - 1) % n + n) % n : (i + t) % n;
        v[static_cast<std::size_t>(image)] = vertex_blocks[static_cast<std::size_t>(i)];
        e[static_cast<std::size_t>(edge)] = edge_blocks[static_cast<std::size_t>(i)];
      }
      std::pair<std::vector<int>, std::vector<int>> candidate{canonical_rgs(v), canonical_rgs(e)};
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

ScanResult scan_cycle_binomials(int n, VertexColourings colourings, const ScanOptions& options) {
  if (n < 3) throw ValidationError(ValidationKind::kInvalidParameter, "cycle scans need n >= 3");
  if (n > options.limits.max_cycle_scan_n) {
    throw ResourceCapError("cycle scan n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(options.limits.max_cycle_scan_n));
  }
  const std::vector<Rgs> edge_parts = set_partitions(n);
  const std::vector<Rgs> vertex_parts =
      colourings == VertexColourings::kAll ? edge_parts : std::vector<Rgs>{Rgs(static_cast<std::size_t>(n), 0)};
  const std::uint64_t width = edge_parts.size();
  const std::uint64_t universe = vertex_parts.size() * width;
  const bool reduce = options.reduce_by_symmetry;

  auto decode = [&](std::uint64_t k) -> std::pair<const Rgs&, const Rgs&> {
    return {vertex_parts[k / width], edge_parts[k % width]};
  };
  const SkipTest skip = [&](std::uint64_t k) {
    if (!reduce) return false;
    const auto [v, e] = decode(k);
    const auto canon = dihedral_canonical(v, e);
    return canon.first != v || canon.second != e;
  };
  const Evaluator evaluate = [&](std::uint64_t k) {
    const auto [v, e] = decode(k);
    return binomial_outcome(coloured_cycle(v, e), options.limits);
  };
  const std::string mode = colourings == VertexColourings::kAll ? "all" : "uniform";
  const std::string id = "cycles-n" + std::to_string(n) + "-" + mode + (reduce ? "-dihedral" : "-plain");
  const std::string description = "coloured " + std::to_string(n) + "-cycles (" + mode +
                                  " vertex colourings): binomials induced by symmetries";
  return run_scan(id, description, universe, evaluate, skip, options);
}

ScanResult scan_circulants(int n, const ScanOptions& options) {
  if (n < 3) throw ValidationError(ValidationKind::kInvalidParameter, "circulant scans need n >= 3");
  if (n > options.limits.max_circulant_scan_n) {
    throw ResourceCapError("circulant scan n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(options.limits.max_circulant_scan_n));
  }
  const int half = n / 2;
  const std::uint64_t universe = (std::uint64_t{1} << half) - 1;
  const Evaluator evaluate = [&](std::uint64_t k) {
    FamilySpec spec{Family::kCirculant, n, 0, {}, {}};
    const std::uint64_t mask = k + 1;
    for (int s = 1; s <= half; ++s) {
      if (mask & (std::uint64_t{1} << (s - 1))) spec.connection_set.push_back(s);
    }
    Outcome o = r_equals_s_outcome(build_family(spec), options.limits);
    if (o.failed) o.example.subject = spec.label();
    return o;
  };
  return run_scan("circulants-n" + std::to_string(n),
                  "uniform circulant graphs on " + std::to_string(n) + " vertices: r = s", universe, evaluate,
                  [](std::uint64_t) { return false; }, options);
}

const char* to_string(ScanPredicate p) {
  switch (p) {
    case ScanPredicate::kBinomialsInduced: return "binomials-induced";
    case ScanPredicate::kREqualsS: return "r-equals-s";
    case ScanPredicate::kPencilFormulas: return "pencil-formulas";
  }
  return "unknown";
}

ScanPredicate scan_predicate_from_string(const std::string& name) {
  for (ScanPredicate p : {ScanPredicate::kBinomialsInduced, ScanPredicate::kREqualsS, ScanPredicate::kPencilFormulas}) {
    if (name == to_string(p)) return p;
  }
  throw ValidationError(ValidationKind::kInvalidParameter, "unknown scan predicate '" + name + "'");
}

ScanResult scan_generic(const std::vector<NamedGraph>& graphs, ScanPredicate predicate, const ScanOptions& options) {
  const Evaluator evaluate = [&](std::uint64_t k) {
    const NamedGraph& item = graphs[k];
    Outcome o;
    switch (predicate) {
      case ScanPredicate::kBinomialsInduced: o = binomial_outcome(item.graph, options.limits); break;
      case ScanPredicate::kREqualsS: o = r_equals_s_outcome(item.graph, options.limits); break;
      case ScanPredicate::kPencilFormulas: o = pencil_formulas_outcome(item.graph, options.limits); break;
    }
    if (o.failed) o.example.subject = item.name;
    return o;
  };
  return run_scan(std::string("generic-") + to_string(predicate),
                  std::to_string(graphs.size()) + " graphs: " + to_string(predicate), graphs.size(), evaluate,
                  [](std::uint64_t) { return false; }, options);
}

}  // namespace recip
