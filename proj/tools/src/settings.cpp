#include "recip_cli/settings.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "recip/errors.hpp"

namespace recip::cli {

namespace {

template <typename T>
void read_key(const nlohmann::json& doc, const char* key, std::optional<T>& slot) {
  if (!doc.contains(key)) return;
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(0, std::string("config.") + key, "must be a non-negative integer");
  }
  slot = v.get<T>();
}

template <typename T>
std::optional<T> parse_env(const char* name, const char* text) {
  if (!text || !*text) return std::nullopt;
  T value{};
  const char* end = text + std::char_traits<char>::length(text);
  const auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value < T{0}) {
    throw ParseError(0, name, std::string("not a non-negative integer: '") + text + "'");
  }
  return value;
}

template <typename T>
void overlay(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

}  // namespace

SettingsLayer load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, "config", e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "config", "top level must be an object");
  static const char* const known[] = {"max_n", "jobs", "max_search_nodes", "max_group_elements",
                                      "max_cycle_scan_n", "max_circulant_scan_n"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError(0, "config." + key, "unknown key");
    }
  }
  SettingsLayer layer;
  read_key(doc, "max_n", layer.max_n);
  read_key(doc, "jobs", layer.jobs);
  read_key(doc, "max_search_nodes", layer.max_search_nodes);
  read_key(doc, "max_group_elements", layer.max_group_elements);
  read_key(doc, "max_cycle_scan_n", layer.max_cycle_scan_n);
  read_key(doc, "max_circulant_scan_n", layer.max_circulant_scan_n);
  return layer;
}

SettingsLayer settings_from_environment(const std::function<const char*(const char*)>& getenv) {
  SettingsLayer layer;
  layer.max_n = parse_env<int>("RECIP_MAX_N", getenv("RECIP_MAX_N"));
  layer.jobs = parse_env<unsigned>("RECIP_JOBS", getenv("RECIP_JOBS"));
  return layer;
}

SettingsLayer large_caps() {
  SettingsLayer layer;
  layer.max_n = 16;
  layer.max_search_nodes = 2'000'000'000;
  layer.max_group_elements = 50'000'000;
  layer.max_cycle_scan_n = 8;
  layer.max_circulant_scan_n = 16;
  return layer;
}

Settings resolve(const SettingsLayer& config, const SettingsLayer& environment, const SettingsLayer& flags) {
  SettingsLayer merged;
  for (const SettingsLayer* layer : {&config, &environment, &flags}) {
    overlay(merged.max_n, layer->max_n);
    overlay(merged.jobs, layer->jobs);
    overlay(merged.max_search_nodes, layer->max_search_nodes);
    overlay(merged.max_group_elements, layer->max_group_elements);
    overlay(merged.max_cycle_scan_n, layer->max_cycle_scan_n);
    overlay(merged.max_circulant_scan_n, layer->max_circulant_scan_n);
  }
  Settings s;
  if (merged.max_n) s.limits.max_n = *merged.max_n;
  if (merged.jobs) s.jobs = *merged.jobs;
  if (merged.max_search_nodes) s.limits.max_search_nodes = *merged.max_search_nodes;
  if (merged.max_group_elements) s.limits.max_group_elements = *merged.max_group_elements;
  if (merged.max_cycle_scan_n) s.limits.max_cycle_scan_n = *merged.max_cycle_scan_n;
  if (merged.max_circulant_scan_n) s.limits.max_circulant_scan_n = *merged.max_circulant_scan_n;
  return s;
}

}  // namespace recip::cli
