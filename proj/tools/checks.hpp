#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reqc::cli {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = false;
};

/// Reference-equivalence and truth-table checks of the gate library on
/// reference ions with coupling g.
std::vector<CheckResult> gate_checks(double coupling);

/// Randomized invariants of the linear-algebra, pulse and fidelity layers.
std::vector<CheckResult> selftest_checks(std::uint64_t seed);

}  // namespace reqc::cli
