#pragma once

#include <string>
#include <vector>

#include "magicstar/ht_algebra.hpp"
#include "magicstar/ht_pair.hpp"

namespace magicstar {

struct unknown_suite_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  Family family = Family::E8;
  int n = 1;
  Charge vertex{1, 1};
  long long sample_budget = 1000000;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kWitnessCap = 100;

struct SuiteReport {
  std::string id;
  std::string mode;  // "exhaustive" or "sampled"
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> witnesses;  // capped at kWitnessCap
  std::vector<std::string> notes;      // auxiliary measured facts
  long long elapsed_ms = 0;
  // Pass criterion per suite; for JACOBI at n >= 2 the criterion is
  // inverted (violations are the measurement, their absence the bug).
  bool passed = false;
};

const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

// Runs one registered suite; throws unknown_suite_error on a bad ID.
SuiteReport run_suite(const std::string& id, const SuiteConfig& cfg);

}  // namespace magicstar
