#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cuntz {

struct SelftestResult {
  std::string family;
  int passed = 0;
  int total = 0;
};

// Runs every invariant family with deterministic randomness; arity 2 and 3.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

}  // namespace cuntz
