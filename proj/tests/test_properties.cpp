#include "doctest.h"
#include "properties.hpp"

using namespace paso::test;

TEST_SUITE("properties") {
  TEST_CASE("interval and strategy algebra") {
    for (const auto& p : algebra_properties(2024, 1000)) {
      CAPTURE(p.name);
      CAPTURE(p.first_failure);
      CHECK(p.cases >= 1000);
      CHECK(p.failures == 0);
    }
  }

  TEST_CASE("comparator laws") {
    for (const auto& p : comparator_properties(1, 1000)) {
      CAPTURE(p.name);
      CAPTURE(p.first_failure);
      CHECK(p.cases >= 1000);
      CHECK(p.failures == 0);
    }
  }
}
