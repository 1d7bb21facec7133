#ifndef ORBIDT_SELFCHECK_HPP
#define ORBIDT_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace orbidt {

struct CriterionResult {
  std::string id;
  bool pass;
  std::string detail;
  double seconds;
};

// The full certification suite A1-A10; all equalities are bit-exact.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int jobs = 1);

}  // namespace orbidt

#endif
