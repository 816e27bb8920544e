#include <doctest.h>

#include <set>
#include <stdexcept>

#include "se3conv/verify.hpp"

using namespace se3conv;

TEST_CASE("every acceptance criterion has a check") {
  std::set<int> crit;
  std::set<std::string> names;
  for (const auto& c : registered_checks()) {
    crit.insert(c.criterion);
    CHECK(names.insert(c.name).second);
  }
  for (int k = 1; k <= 13; ++k) CHECK(crit.count(k) == 1);
}

TEST_CASE("suite filter") {
  const auto r = run_verification("structure", kDefaultSeed);
  CHECK(r.checks.size() == 3);
  CHECK(r.all_pass());
  CHECK_THROWS_AS(run_verification("nope", kDefaultSeed), std::invalid_argument);
}

TEST_CASE("checks are deterministic per seed") {
  const auto& checks = registered_checks();
  for (const auto& c : checks) {
    if (c.name != "wigner_representation") continue;
    CHECK(c.run(1).max_abs_error == c.run(1).max_abs_error);
  }
}
