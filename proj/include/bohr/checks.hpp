#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bohr/functionals.hpp"

namespace bohr {

struct CheckItem {
  CheckItem() = default;
  explicit CheckItem(std::string n) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  long failures = 0;
  double worst = 0.0;  // largest observed error, where meaningful
  std::string detail;

  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;
  int flagged_cells = 0;

  bool ok() const;
  long checks() const;
  long failures() const;
};

enum class Grid { kCoarse, kFull };

// identities, oracle, sharpness, monotonicity, tables, discrepancy
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, Grid grid = Grid::kFull);

// Parameter sets exercised by the property suites, in default variants.
std::vector<Functional> standard_catalog();
// The catalog plus every other supported variant that is a different formula.
std::vector<Functional> variant_catalog();

// alpha in {0, 0.1, ..., 0.9}
std::vector<double> alpha_grid();
// coarse: 10 radii 0.09..0.90; full: 18 radii 0.05..0.90
std::vector<double> radius_grid(Grid grid);

}  // namespace bohr
