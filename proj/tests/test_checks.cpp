#include <doctest.h>

#include "bohr/checks.hpp"
#include "bohr/errors.hpp"

using namespace bohr;

TEST_CASE("catalog covers every kind") {
  const auto cat = standard_catalog();
  for (Kind k : kAllKinds) {
    bool found = false;
    for (const auto& f : cat) found = found || f.kind == k;
    CHECK(found);
  }
  CHECK(variant_catalog().size() > cat.size());
}

TEST_CASE("grids") {
  CHECK(alpha_grid().size() == 10);
  CHECK(radius_grid(Grid::kCoarse).size() == 10);
  const auto full = radius_grid(Grid::kFull);
  CHECK(full.size() == 18);
  CHECK(full.front() == 0.05);
  CHECK(full.back() == 0.9);
}

TEST_CASE("suites pass") {
  for (const auto& name : suite_names()) {
    const auto rep = run_suite(name, Grid::kCoarse);
    CAPTURE(name);
    CHECK(rep.ok());
    CHECK(rep.checks() > 0);
  }
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}
