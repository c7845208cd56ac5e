#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/radius.hpp"

namespace bohr {

// Which of (m, N, p) a table's grid actually varies; absent columns are
// printed blank.
struct GridAxes {
  bool m = true;
  bool N = true;
  bool p = true;
};

struct GoldenCell {
  LiteralParams params;
  std::string_view printed;  // digits exactly as they appear in the table
  double golden = 0.0;       // printed value parsed ("," read as ".")
  std::optional<std::string_view> anomaly;
};

struct TableSpec {
  std::string_view id;  // "R1" .. "R16"
  LiteralTag tag;
  std::string_view caption;
  GridAxes axes;
  std::vector<GoldenCell> cells;
};

// The sixteen printed root tables, in caption order.
const std::vector<TableSpec>& golden_tables();
const TableSpec* find_table(std::string_view id);

// Instantiates the general theorem behind a printed equation with the same
// parameters. T1 rows with p > 1 set allow_extended_p.
RadiusProblem canonical_problem(LiteralTag tag, const LiteralParams& params);
RadiusProblem literal_problem(LiteralTag tag, const LiteralParams& params);

// One canonical problem per golden cell; the set every verification sweep
// runs over.
struct CatalogEntry {
  std::string_view table_id;
  LiteralTag tag;
  LiteralParams params;
  RadiusProblem problem;
  std::string label() const;
};
std::vector<CatalogEntry> catalog_problems();

// Tolerance on |computed - golden| for a golden cell to pass.
inline constexpr double kGoldenTolerance = 5e-5;

}  // namespace bohr
