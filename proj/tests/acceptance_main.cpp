#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "orbidt/selfcheck.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260814;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int jobs = (int)std::thread::hardware_concurrency();
  if (jobs < 1) jobs = 1;
  if (argc > 2) jobs = std::atoi(argv[2]);

  const auto results = orbidt::run_acceptance(seed, jobs);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::printf("%s %s (%.1fs)%s%s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                r.seconds, r.detail.empty() ? "" : " ", r.detail.c_str());
  }
  std::fflush(stdout);
  return ok ? 0 : 1;
}
