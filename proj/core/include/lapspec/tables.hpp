#ifndef LAPSPEC_TABLES_HPP
#define LAPSPEC_TABLES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/census.hpp"

namespace lapspec {

/// One published row: equivalent descriptions of a graph, its spectrum and its label.
struct TableRow {
  int table;
  std::vector<std::string_view> expressions;
  std::string_view spectrum;
  std::string_view label;
};

/// All rows of the four appendix tables (orders 4 to 7), in print order.
std::span<const TableRow> appendix_rows();

struct RowResult {
  int table = 0;
  int row = 0;  // 1-based within its table
  std::string expressions;  // joined with " = "
  std::string expected_spectrum;
  std::string expected_label;
  std::string computed_spectrum;
  std::string computed_label;
  /// Every listed description gives the same graph up to isomorphism.
  bool descriptions_agree = false;
  bool spectrum_ok = false;
  bool label_ok = false;
  /// For orders the search covers by default (<= 6): the graph is among the
  /// census realizers of the label.
  std::optional<bool> found_by_search;
  bool pass = false;
  std::string detail;
};

struct TablesReport {
  std::vector<RowResult> rows;
  bool all_pass() const;
};

/// Maximum order at which rows are also confirmed through find_realizations.
inline constexpr int kTableSearchOrder = 6;

TablesReport reproduce_appendix_tables(const SearchOptions& options = {});

}  // namespace lapspec

#endif  // LAPSPEC_TABLES_HPP
