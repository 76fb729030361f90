#pragma once

#include <string>
#include <vector>

namespace contpath::verify {

// One row of the cross-check suite.  `worst` is the largest observed
// deviation divided by the allowance for that check, so pass == (worst <= 1
// and the runtime bound, where one applies, held); exact integer checks
// contribute 0 when they hold and infinity when they do not.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double worst = 0.0;
  std::string detail;
  double seconds = 0.0;
};

// Runs every cross-check.  `fast` shrinks the Monte Carlo draw counts from
// 10^6 to 10^5 (the statistical checks scale their allowances with sqrt(N),
// so the verdicts stay meaningful); everything else is unchanged.
std::vector<CriterionResult> run_all(bool fast = false);

}  // namespace contpath::verify
