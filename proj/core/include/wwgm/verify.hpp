#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wwgm {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  long cases = 0;
  // First counterexample when failed; informational note otherwise.
  std::string detail;
};

struct VerifyOptions {
  std::uint32_t seed = 20240601;
  bool include_fock = true;
  int fock_n = 64;
  bool parallel = true;
};

/// Runs every invariant check of the library. Results come back in a fixed
/// order regardless of scheduling.
std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

}  // namespace wwgm
