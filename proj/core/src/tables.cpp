#include "lapspec/tables.hpp"

#include <algorithm>

#include "lapspec/canonical.hpp"
#include "lapspec/expression.hpp"
#include "lapspec/spec_target.hpp"

namespace lapspec {
namespace {

const std::vector<TableRow>& rows() {
  static const std::vector<TableRow> table{
      {1, {"S4", "K{3,1}", "K1 v 3K1"}, "{0,1,1,4}", "S_{{2,3}_4^1}"},
      {1, {"C4", "K{2,2}", "2K1 v 2K1"}, "{0,2,2,4}", "S_{{1,3}_4^2}"},
      {1, {"K{1,1,2}", "K2 v 2K1"}, "{0,2,4,4}", "S_{{1,3}_4^4}"},

      {2, {"K1 v ~K{1,1,2}"}, "{0,1,1,3,5}", "S_{{2,4}_5^1}"},
      {2, {"K{3,2}"}, "{0,2,2,3,5}", "S_{{1,4}_5^2}"},
      {2, {"F2", "K1 v 2K2"}, "{0,1,3,3,5}", "S_{{2,4}_5^3}"},
      {2, {"K1 v ~S4"}, "{0,1,4,4,5}", "S_{{2,3}_5^4}"},
      {2, {"K2 v ~P3"}, "{0,2,4,5,5}", "S_{{1,3}_5^5}"},

      {3, {"K1 v (2K1 u P3)"}, "{0,1,1,2,4,6}", "S_{{3,5}_6^1}"},
      {3, {"K1 v ~K{2,3}"}, "{0,1,3,4,4,6}", "S_{{2,5}_6^4}"},
      {3, {"K1 v (K1 u S4)"}, "{0,1,2,2,5,6}", "S_{{3,4}_6^2}"},
      {3, {"2K1 v ~K{1,3}"}, "{0,2,4,5,5,6}", "S_{{1,3}_6^5}"},
      {3, {"K1 v (K1 u C4)"}, "{0,1,3,3,5,6}", "S_{{2,4}_6^3}"},
      {3, {"K1 v (K1 u K{1,1,2})"}, "{0,1,3,5,5,6}", "S_{{2,4}_6^5}"},
      {3, {"~(P2 x P3)"}, "{0,1,3,3,4,5}", "S_{{2,6}_6^3}"},
      {3, {"P3 v ~P3"}, "{0,3,4,5,6,6}", "S_{{1,2}_6^6}"},
      {3, {"P2 x P3"}, "{0,1,2,3,3,5}", "S_{{4,6}_6^3}"},
      {3, {"K2 v (K1 u P3)"}, "{0,2,3,5,6,6}", "S_{{1,4}_6^6}"},

      {4, {"K1 v (P3 u ~P3)"}, "{0,1,1,2,3,4,7}", "S_{{5,6}_7^1}"},
      {4, {"K1 v (2K1 u (K1 v ~P3))"}, "{0,1,1,2,4,5,7}", "S_{{3,6}_7^1}"},
      {4, {"2K1 v (K1 u S4)"}, "{0,2,3,3,5,6,7}", "S_{{1,4}_7^3}"},
      {4, {"2K1 v (K1 u C4)"}, "{0,2,4,4,5,6,7}", "S_{{1,3}_7^4}"},
      {4, {"K1 v ~(P2 x P3)"}, "{0,2,4,4,5,6,7}", "S_{{1,3}_7^4}"},
      {4, {"K1 v (P2 x P3)"}, "{0,2,3,4,4,6,7}", "S_{{1,5}_7^4}"},
      {4, {"2K1 v (K2 u P3)"}, "{0,2,3,4,5,5,7}", "S_{{1,5}_7^5}"},
      {4, {"K1 v (K1 u (K1 v ~S4))"}, "{0,1,2,5,5,6,7}", "S_{{3,4}_7^5}"},
      {4, {"2K1 v (K1 u K{1,1,2})"}, "{0,2,4,5,6,6,7}", "S_{{1,3}_7^6}"},
      {4, {"K1 v (K1 u (K2 v ~P3))"}, "{0,1,3,5,6,6,7}", "S_{{2,4}_7^6}"},
      {4, {"K1 v (2K1 v (K1 u P3))"}, "{0,3,4,5,6,7,7}", "S_{{1,2}_7^7}"},
      {4, {"K2 v (K1 u (K1 v ~P3))"}, "{0,2,3,5,6,7,7}", "S_{{1,4}_7^7}"},
      {4, {"K2 v (K2 u P3)"}, "{0,2,3,4,5,7,7}", "S_{{1,6}_7^7}"},
  };
  return table;
}

RowResult check_row(const TableRow& row, int index, const SearchOptions& options) {
  RowResult r;
  r.table = row.table;
  r.row = index;
  r.expected_spectrum = std::string(row.spectrum);
  r.expected_label = std::string(row.label);
  for (std::size_t k = 0; k < row.expressions.size(); ++k) {
    if (k) r.expressions += " = ";
    r.expressions += std::string(row.expressions[k]);
  }

  try {
    std::vector<Graph> graphs;
    for (auto text : row.expressions) graphs.push_back(Expression::parse(text).evaluate());
    const CanonicalForm form = canonical_form(graphs.front());
    r.descriptions_agree = std::all_of(graphs.begin(), graphs.end(),
                                       [&](const Graph& g) { return canonical_form(g) == form; });

    const auto spectrum = integer_spectrum(graphs.front());
    r.computed_spectrum = spectrum ? spectrum->to_string() : "NOT_INTEGRAL";
    r.spectrum_ok = spectrum && *spectrum == Spectrum::parse(row.spectrum);
    if (spectrum) {
      if (auto t = classify_spectrum(*spectrum)) r.computed_label = t->label();
    }
    std::string label_problem;
    try {
      const SpecTarget printed = parse_target(row.label);
      r.label_ok = r.computed_label == printed.label() && expand(printed) == Spectrum::parse(row.spectrum);
      if (!r.label_ok) label_problem = "label mismatch";
    } catch (const TargetError& e) {
      label_problem = "printed label " + std::string(row.label) + " is not a valid set (" + e.what() + ")";
    }

    const auto printed_shape = classify_spectrum(Spectrum::parse(row.spectrum));
    if (printed_shape && graphs.front().order() <= kTableSearchOrder) {
      const auto found = find_realizations(*printed_shape, options);
      r.found_by_search = std::any_of(found.begin(), found.end(),
                                      [&](const Graph& g) { return canonical_form(g) == form; });
    }
    r.pass = r.descriptions_agree && r.spectrum_ok && r.label_ok && r.found_by_search.value_or(true);
    if (!r.descriptions_agree) r.detail = "descriptions are not isomorphic";
    else if (!r.spectrum_ok) r.detail = "spectrum mismatch";
    else if (!r.label_ok) r.detail = label_problem;
    else if (!r.found_by_search.value_or(true)) r.detail = "graph not among the search realizers";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

}  // namespace

std::span<const TableRow> appendix_rows() { return rows(); }

bool TablesReport::all_pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; });
}

TablesReport reproduce_appendix_tables(const SearchOptions& options) {
  TablesReport report;
  int table = 0;
  int index = 0;
  for (const TableRow& row : rows()) {
    index = row.table == table ? index + 1 : 1;
    table = row.table;
    report.rows.push_back(check_row(row, index, options));
  }
  return report;
}

}  // namespace lapspec
