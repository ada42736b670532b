#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zerodiv {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when passed

  bool passed() const { return failures == 0; }
};

/// Field, group, ring and torsion-instance suites. Every case draws from its
/// own generator seeded by (seed, suite, case), so results do not depend on
/// the worker count.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, unsigned workers, std::size_t cases = 1000);

/// Group and field texts the suites cover.
std::vector<std::string> selftest_groups();
std::vector<std::string> selftest_fields();

}  // namespace zerodiv
