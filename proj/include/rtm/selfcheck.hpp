#pragma once

#include <string>
#include <vector>

namespace rtm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite of every module with sizes bounded by max_degree
/// (forest degrees, relation weights m + n, basis degrees). Deterministic.
std::vector<CheckResult> run_selfcheck(std::size_t max_degree);

}  // namespace rtm
