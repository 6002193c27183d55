#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ternary/scalar.hpp"

namespace ternary {

struct SuiteConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::optional<Domain> domain;        // suite default when unset
  std::vector<std::uint64_t> primes;   // suite default when empty
  std::string output_path;             // also written here when nonempty
  unsigned jobs = 1;                   // threads over trials; output independent of it
};

const std::vector<std::string>& suite_names();

// Runs one property suite. Trial i draws from its own engine seeded by
// (seed, i), so the report is a function of the config alone. Throws
// unknown_suite for a bad name.
nlohmann::json run_suite(const SuiteConfig& cfg);

// The fixed constant relating 4 I^3 - J^2 to the raw resultant of the
// partials of a cubic.
inline constexpr long kCubicKappa = -256;

}  // namespace ternary
