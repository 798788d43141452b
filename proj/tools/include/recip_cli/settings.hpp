#pragma once

#include <functional>
#include <optional>
#include <string>

#include "recip/limits.hpp"

namespace recip::cli {

struct Settings {
  Limits limits;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Values from one source; unset fields defer to the next source.
struct SettingsLayer {
  std::optional<int> max_n;
  std::optional<unsigned> jobs;
  std::optional<std::uint64_t> max_search_nodes;
  std::optional<std::uint64_t> max_group_elements;
  std::optional<int> max_cycle_scan_n;
  std::optional<int> max_circulant_scan_n;
};

/// JSON object with any of the SettingsLayer keys. Throws ParseError on
/// malformed content and recip::Error when the file cannot be read.
SettingsLayer load_config_file(const std::string& path);

/// RECIP_MAX_N and RECIP_JOBS through `getenv` (injectable for tests).
SettingsLayer settings_from_environment(const std::function<const char*(const char*)>& getenv);

/// Caps lifted by --allow-large.
SettingsLayer large_caps();

/// Later layers win: defaults < config < environment < flags.
Settings resolve(const SettingsLayer& config, const SettingsLayer& environment, const SettingsLayer& flags);

}  // namespace recip::cli
