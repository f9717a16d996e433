// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>

#include "ribbon/sweep.hpp"

int main() {
  const std::uint64_t seed = ribbon::sweep::seed_from_env();
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  int failed = 0;
  for (const auto& c : ribbon::sweep::run_all(seed)) {
    std::printf("[%s] %2d. %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
