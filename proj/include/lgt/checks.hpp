#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lgt {

// One verified invariant: `pass` holds iff `defect` satisfies `criterion`
// (written out as text, e.g. "<= 1e-12" or "in [3,5]").
struct CheckItem {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  std::string criterion;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

const std::vector<std::string>& check_suite_names();

// Runs one named verification suite on seeded random configurations.
// Throws std::invalid_argument for an unknown suite name.
CheckReport run_check_suite(const std::string& name,
                            std::uint64_t seed = 20240915u);

}  // namespace lgt
