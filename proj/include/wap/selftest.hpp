#pragma once

#include <string>
#include <vector>

namespace wap {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Bijection, size-formula, hook and oracle-equivalence suites at reduced size.
std::vector<SelftestCheck> run_selftest();

}  // namespace wap
