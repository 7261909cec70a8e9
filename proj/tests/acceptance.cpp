#include <cstdio>
#include <string>

#include "hochkit/harness.hpp"

namespace {

const char* const kTitles[hochkit::kCriteria] = {
    "axiom suite for builtins and constructors",
    "HH of the ground field through degree 4",
    "dual numbers HH^* and HH_* against the periodic resolution",
    "Kunneth for HH^* on 15 pairs, n <= 3",
    "Kunneth for HH_* with shuffle witness, n <= 3",
    "Morita invariance A vs M_2(A) through degree 3",
    "mixed complex identities, HC(k), Connes periodicity",
    "HC Kunneth exact sequence through degree 2",
    "Cech P1 line bundles against the monomial oracle",
    "Cech Kunneth on P1xP1 with AW and EZ",
    "truncation honesty at +2",
};

}  // namespace

int main() {
  int failed = 0;
  for (int i = 1; i <= hochkit::kCriteria; ++i) {
    hochkit::Report r = hochkit::run_criterion(i);
    bool ok = r.pass();
    if (!ok) ++failed;
    std::printf("criterion %2d %s  %-60s %8.3f s (limit %.0f s)\n", i, ok ? "PASS" : "FAIL", kTitles[i - 1], r.seconds,
                r.time_limit);
    if (!ok) {
      for (const auto& c : r.checks)
        if (!c.pass) std::printf("    failed: %s %s\n", c.name.c_str(), c.note.c_str());
      if (!r.within_time()) std::printf("    over the time limit\n");
    }
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", hochkit::kCriteria - failed, hochkit::kCriteria);
  return failed == 0 ? 0 : 1;
}
