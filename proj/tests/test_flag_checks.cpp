#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pentaflag/flag_checks.hpp"

using namespace pentaflag;

TEST_CASE("chain identity on small hosts") {
  const auto c = flag::chain_identity({2, 3, 5}, 2);
  CHECK(c.passed());
}

TEST_CASE("pair-density defect") {
  const auto c = flag::pair_defect_decay({6, 9}, 1);
  CHECK(c.passed());
  bool reported = false;
  for (const auto& w : c.witnesses) reported |= w.name.find("not monotone") != std::string::npos;
  CHECK(reported);
}
