#pragma once

// Identity suites behind `fubm verify`. Failures are data, never exceptions.

#include <cstdint>
#include <string>
#include <vector>

#include "fubm/json_fwd.hpp"

namespace fubm {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<VerifyFailure> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Suite names in run order.
const std::vector<std::string>& verify_suite_names();
/// Size knob used when max_n <= 0.
int verify_default_size(const std::string& suite);
/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify_suite(const std::string& suite, int max_n = 0, std::uint64_t seed = kDefaultSeed);
std::vector<VerifyReport> verify_all(int max_n = 0, std::uint64_t seed = kDefaultSeed);

Json to_json(const VerifyReport& r);

}  // namespace fubm
