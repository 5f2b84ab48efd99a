// Acceptance gate: runs every criterion at full size and prints one verdict
// line each. Exit 0 only if all pass. Timings go to stderr so stdout stays
// byte-deterministic for a fixed seed.

#include <chrono>
#include <cstdio>

#include "gz/selftest.hpp"

int main() {
  const std::uint64_t seed = 20260822ull;
  gz::ToleranceConfig tol;

  const auto start = std::chrono::steady_clock::now();
  auto results = gz::run_selftest(seed, 6, tol);
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-34s residual %.3e  %s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.residual, r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n",
              static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  std::fprintf(stderr, "acceptance suite wall time: %.2fs\n", total);
  return failed == 0 ? 0 : 1;
}
