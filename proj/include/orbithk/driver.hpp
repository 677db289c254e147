#pragma once

#include "orbithk/chevalley.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbithk::driver {

using json = nlohmann::json;

inline constexpr const char* kCodeVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCacheEnvVar = "ORBIT_HK_CACHE";

struct RunConfig {
  std::string command;
  std::vector<std::pair<char, int>> algebras;
  double c = 0.0;
  double t = 1.0;
  std::optional<double> eta;  // overrides t when set
  int trials = 200;
  bool trials_explicit = false;
  std::uint64_t seed = 42;
  std::map<std::string, double> tol;  // per-check tolerance overrides
  std::string cache_dir;
  // spectrum
  std::string triple = "theta";  // theta | principal | file
  std::string triple_file;
  // eguchi-hanson
  std::vector<double> eh_c = {0.0, 1.0, 3.0};
  int eh_points = 100;
};

/// "A2", "E8", ... or "all" (the standard verification list through E6).
std::vector<std::pair<char, int>> parse_algebras(const std::string& spec);

json run_verify(const RunConfig& cfg);
json run_lambda_table(const RunConfig& cfg);
json run_spectrum(const RunConfig& cfg);
json run_eguchi_hanson(const RunConfig& cfg);

bool report_pass(const json& report);
/// Report with volatile fields (timings) removed; the determinism contract
/// covers exactly this view.
json deterministic_view(json report);

std::string default_cache_dir();

}  // namespace orbithk::driver
