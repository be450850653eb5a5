#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jetfol {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure message, empty on success
  double seconds = 0;
};

std::vector<std::string> selftest_names();

/// Runs every property with per-property seeds derived from `seed`. Results
/// are sorted by name regardless of `jobs`.
std::vector<PropertyResult> run_selftest(std::uint64_t seed, unsigned jobs = 1);

/// JUnit-style XML summary.
std::string junit_xml(const std::vector<PropertyResult>& results);

}  // namespace jetfol
