#pragma once

#include "repcat/orbit.hpp"
#include "repcat/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace repcat {

/// Every closed walk of length 1..max_len, with each rotation and each
/// starting point listed separately.
struct CycleInventory {
  std::size_t max_len = 0;
  std::vector<Cycle> cycles;
};

CycleInventory enumerate_all_cycles(const Quiver& q, std::size_t max_len);

/// cycle_value(E, C) == 1 for every inventoried cycle.
bool all_cycles_pass(const ArrowScalars& E, const CycleInventory& inventory);

/// Same verdict as the inventory route at bound max_len without listing the
/// walks: a breadth-first sweep over (vertex, accumulated value) pairs from
/// every start vertex, stopping at the first closed walk of value != 1.
bool all_cycles_pass(const ArrowScalars& E, const Quiver& q, std::size_t max_len);

struct TableRow {
  std::string left;
  std::string right;
  /// (coefficient, basis name) pairs sorted by name.
  std::vector<std::pair<Rational, std::string>> terms;
};

/// Order-normalized listing of every nonzero product, sorted by the names
/// of the two factors, so that tables of different builds can be diffed.
std::vector<TableRow> structure_table(const GradedAlgebra& g);
/// "{g} * {f} = c {h} + ..." per row, preceded by one "basis {b}" line per
/// basis element.
std::string structure_table_text(const GradedAlgebra& g);

}  // namespace repcat
