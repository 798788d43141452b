#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "doctest.h"
#include "recip/errors.hpp"
#include "recip_cli/settings.hpp"

using namespace recip;
using namespace recip::cli;

namespace {

std::function<const char*(const char*)> fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const char* name) -> const char* {
    auto it = vars.find(name);
    return it == vars.end() ? nullptr : it->second.c_str();
  };
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(RECIP_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli-settings") {
  TEST_CASE("defaults survive empty layers") {
    const Settings s = resolve({}, {}, {});
    CHECK(s.limits.max_n == Limits{}.max_n);
    CHECK(s.jobs == 0);
  }

  TEST_CASE("flags beat environment beats config") {
    SettingsLayer config;
    config.max_n = 7;
    config.jobs = 2;
    config.max_search_nodes = 99;
    const SettingsLayer env = settings_from_environment(fake_env({{"RECIP_MAX_N", "9"}}));
    SettingsLayer flags;
    flags.jobs = 5;
    const Settings s = resolve(config, env, flags);
    CHECK(s.limits.max_n == 9);
    CHECK(s.jobs == 5);
    CHECK(s.limits.max_search_nodes == 99);
  }

  TEST_CASE("environment values must be non-negative integers") {
    CHECK_THROWS_AS(settings_from_environment(fake_env({{"RECIP_JOBS", "many"}})), ParseError);
    CHECK_THROWS_AS(settings_from_environment(fake_env({{"RECIP_MAX_N", "-3"}})), ParseError);
    CHECK(settings_from_environment(fake_env({{"RECIP_JOBS", "3"}})).jobs == 3u);
  }

  TEST_CASE("config files are JSON with known keys only") {
    const SettingsLayer layer = load_config_file(write_temp("ok.json", R"({"max_n": 8, "max_cycle_scan_n": 6})"));
    CHECK(layer.max_n == 8);
    CHECK(layer.max_cycle_scan_n == 6);
    CHECK_FALSE(layer.jobs.has_value());
    CHECK_THROWS_AS(load_config_file(write_temp("typo.json", R"({"max_nn": 8})")), ParseError);
    CHECK_THROWS_AS(load_config_file(write_temp("bad.json", "{max_n: 8")), ParseError);
    CHECK_THROWS_AS(load_config_file(write_temp("wrong_type.json", R"({"jobs": "four"})")), ParseError);
    CHECK_THROWS_AS(load_config_file(std::string(RECIP_TEST_TMP) + "/absent.json"), Error);
  }

  TEST_CASE("large caps raise every limit") {
    const Settings base = resolve({}, {}, {});
    const Settings large = resolve(large_caps(), {}, {});
    CHECK(large.limits.max_n > base.limits.max_n);
    CHECK(large.limits.max_search_nodes > base.limits.max_search_nodes);
    CHECK(large.limits.max_group_elements > base.limits.max_group_elements);
    CHECK(large.limits.max_cycle_scan_n > base.limits.max_cycle_scan_n);
    CHECK(large.limits.max_circulant_scan_n > base.limits.max_circulant_scan_n);
  }
}
