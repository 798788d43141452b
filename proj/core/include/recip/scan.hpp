#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "recip/graph.hpp"
#include "recip/limits.hpp"

namespace recip {

struct Counterexample {
  std::uint64_t index = 0;  // position in the enumeration
  std::string subject;      // graph (compact JSON) or connection set
  std::string witness;      // offending binomial, or "r=3 s=4"
};

struct ScanResult {
  std::string scan_id;
  std::string description;
  std::uint64_t universe_size = 0;  // before symmetry reduction
  std::uint64_t checked = 0;        // items evaluated
  std::uint64_t skipped = 0;        // non-canonical under the symmetry reduction
  std::vector<Counterexample> counterexamples;  // sorted by index
  /// Items whose binomials are all induced, but some binomial is not
  /// literally x_p − x_q within one orbit (or a cross-component variable).
  std::uint64_t strict_exceptions = 0;
  double elapsed_seconds = 0;

  bool holds() const { return counterexamples.empty(); }
};

enum class VertexColourings { kAll, kUniform };

struct ScanOptions {
  unsigned jobs = 0;            // 0: hardware concurrency
  bool reduce_by_symmetry = true;
  std::string checkpoint_path;  // empty: no checkpointing
  std::uint64_t chunk_size = 256;
  /// Stop (with a checkpoint written) once this many enumeration indices
  /// are done in this run; 0 means run to completion.
  std::uint64_t stop_after = 0;
  Limits limits;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

/// Every colouring of C_n (vertex partitions × edge partitions, as RGS in
/// lexicographic order, index = vertex_rank·B(n) + edge_rank), optionally
/// keeping only the lexicographically least member of each dihedral
/// orbit. A colouring fails when some binomial of I₁ is not induced by
/// symmetries. Edge k joins vertices k+1 and (k+1 mod n)+1.
ScanResult scan_cycle_binomials(int n, VertexColourings colourings, const ScanOptions& options = {});

/// Nonempty connection sets S ⊆ {1..⌊n/2⌋} (bitmask order); fails when
/// the uniform circulant graph has r ≠ s.
ScanResult scan_circulants(int n, const ScanOptions& options = {});

enum class ScanPredicate { kBinomialsInduced, kREqualsS, kPencilFormulas };

const char* to_string(ScanPredicate p);
ScanPredicate scan_predicate_from_string(const std::string& name);

struct NamedGraph {
  std::string name;
  ColouredGraph graph;
};

/// Applies `predicate` to each graph in order. kREqualsS and
/// kPencilFormulas need uniform graphs; kPencilFormulas compares the
/// computed linear dimension and minimal quadric count with
/// C(n+1,2) − r and C(r−1,2).
ScanResult scan_generic(const std::vector<NamedGraph>& graphs, ScanPredicate predicate,
                        const ScanOptions& options = {});

/// The coloured C_n for a pair of RGS (vertex blocks, edge blocks).
ColouredGraph coloured_cycle(const std::vector<int>& vertex_blocks, const std::vector<int>& edge_blocks);

/// Lexicographically least (vertex RGS, edge RGS) over the 2n dihedral
/// relabellings of the cycle.
std::pair<std::vector<int>, std::vector<int>> dihedral_canonical(const std::vector<int>& vertex_blocks,
                                                                 const std::vector<int>& edge_blocks);

}  // namespace recip
