#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace a3d {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Suites run by `check all`: word-core, exact-linalg, a3d-engine, sigma-calculus.
std::vector<std::string> default_check_suites();
/// Every suite name, including the opt-in `akey` stress computation.
std::vector<std::string> all_check_suites();

std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opts);

}  // namespace a3d
