// Runs the full cross-check suite and prints one verdict line per criterion.
// Exit status 0 when everything holds, 3 otherwise (mirroring the CLI).

#include <cstdio>

#include "contpath/verify.hpp"

int main() {
  const auto results = contpath::verify::run_all(false);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("[%s] %2d %-28s worst %.3e  (%.2fs)  %s\n", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.worst, r.seconds, r.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "all criteria hold" : "criteria FAILED");
  return all_pass ? 0 : 3;
}
