#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "se3conv/oracle.hpp"

namespace se3conv {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Check {
  std::string name;
  std::string suite;
  int criterion = 0;  // acceptance criterion number, 0 if none
  std::function<CheckResult(std::uint64_t seed)> run;
};

const std::vector<Check>& registered_checks();
std::vector<std::string> suite_names();

// Runs every check of the suite ("" or "all" for everything). Throws
// std::invalid_argument for unknown suites. Progress lines go to progress
// when given.
VerificationReport run_verification(const std::string& suite, std::uint64_t seed,
                                    std::ostream* progress = nullptr);

}  // namespace se3conv
