#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfold/census.hpp"

namespace pfold {

struct VerifyBudget {
  int max_square = 24;                     // largest window dimension enumerated
  int max_depth = kDefaultDepthCap;        // supertile depth cap
  std::uint64_t max_closed_n = 1'000'000;  // closed form vs recursion loop bound
  int workers = 1;                         // window-scan partitions
};

struct CheckReport {
  std::string id;
  std::string anchor;
  std::string params;
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::string witness;  // first counterexample when failing
  double seconds = 0.0;
};

// Runs every identity and oracle check in a fixed order, sharing one pattern
// cache. Individual failures become report rows, never exceptions; checks that
// do not fit the budget are reported skipped, which is distinct from passing.
std::vector<CheckReport> verify_all(const VerifyBudget& budget = {},
                                    const SubstitutionSystem& rules = paperfolding_rules());

bool all_passed(const std::vector<CheckReport>& reports);

// The fixed vocabulary of anchor strings used by verify_all.
const std::vector<std::string>& known_anchors();

std::string report_table(const std::vector<CheckReport>& reports);
std::string report_json(const std::vector<CheckReport>& reports);

}  // namespace pfold
