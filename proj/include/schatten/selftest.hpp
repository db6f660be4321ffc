#pragma once

#include <functional>
#include <string>
#include <vector>

namespace schatten {

struct SelfTestItem {
  std::string name;
  std::function<bool()> run;
};

/// Hand-computed fixtures and small invariants covering every public
/// operation. Exact expected values are asserted to 1e-12 relative.
const std::vector<SelfTestItem>& selftest_items();

/// Returns the names of failing items (exceptions count as failures).
std::vector<std::string> run_selftest();

}  // namespace schatten
