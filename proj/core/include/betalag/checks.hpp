#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace betalag {

// One verification result; serialized as a JSON line by to_json_line.
struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  double se = 0.0;          // standard error (Monte Carlo checks only)
  bool monte_carlo = false;
  bool pass = false;
  double runtime_seconds = 0.0;
};

std::string to_json_line(const CheckReport& r);

struct CheckOptions {
  std::uint64_t seed = 20260823;
  bool quick = false;  // deterministic subset only (skip Monte Carlo)
};

// All registered check ids, in canonical order.
const std::vector<std::string>& check_ids();

// In-scope identity -> check-id map; every identity must resolve to a
// registered id (asserted by tests and `verify registry`).
const std::vector<std::pair<std::string, std::string>>& identity_registry();

// The grids shipped with the repo (config/verify_grids.json mirrors this).
const std::string& default_config_json();

// Run one check over its configured grid; reports come back in a
// deterministic order for fixed (config, options).
std::vector<CheckReport> run_check(const std::string& id,
                                   const std::string& config_json,
                                   const CheckOptions& options);

}  // namespace betalag
