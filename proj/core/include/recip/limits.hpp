#pragma once

#include <cstdint>

namespace recip {

// Size guards. Defaults keep every operation at desk scale; the CLI may
// raise them from flags, RECIP_* environment variables or a config file.
struct Limits {
  int max_n = 12;
  std::uint64_t max_search_nodes = 50'000'000;
  std::uint64_t max_group_elements = 2'000'000;
  int max_cycle_scan_n = 6;
  int max_circulant_scan_n = 10;
};

}  // namespace recip
