#ifndef QOCSIM_VALIDATE_HPP
#define QOCSIM_VALIDATE_HPP

// Validation of the shipped reference coefficient tables against the
// encoder's own derivation: exact matches where the published values are
// exact, global display-scale fits with itemized outliers elsewhere.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qocsim/pauli.hpp"

namespace qocsim {

// A reference table: one Pauli string per row, one or more value columns.
// '#' lines are comments; "# columns: <names>" names the columns and
// "# scale: <factors>" gives per-column multipliers applied on load.
struct CoefficientTable {
  std::string name; // file stem
  std::vector<std::string> columns;
  std::vector<double> scales;
  std::vector<PauliString> ops;
  std::vector<std::vector<double>> values; // [row][column], scales applied
};

CoefficientTable load_coefficient_table(const std::string& path);

struct DeviationRow {
  std::string table;
  std::string column;
  std::string op;
  double published = 0.0; // table value (scales applied)
  double computed = 0.0;  // model coefficient (before display scale)
  double residual = 0.0;  // per-mode: see TableValidation::mode
  bool itemized = false;
};

// Outcome of one table/column validation.
//  mode "exact":     residuals are |published - scale*computed|, matched
//                    counts bitwise-equal entries.
//  mode "rounded":   residuals are absolute, matched counts entries within
//                    the rounding tolerance.
//  mode "scale-fit": a single display scale is least-squares fitted;
//                    residuals are relative, entries beyond the tolerance
//                    are itemized and the scale refit without them.
struct TableValidation {
  std::string table;
  std::string column;
  std::string mode;
  std::size_t entries = 0;
  std::size_t matched = 0;
  double scale = 0.0;
  double max_residual = 0.0; // over non-itemized entries
  double tolerance = 0.0;
  double pass_fraction = 1.0; // matched/entries required for pass
  std::vector<std::string> itemized; // "op" or "op:column"
  bool pass = false;
  std::vector<DeviationRow> deviations;
};

TableValidation validate_exact(const CoefficientTable& table,
                               std::size_t column, const PauliSum& computed,
                               double scale);

TableValidation validate_rounded(const CoefficientTable& table,
                                 std::size_t column, const PauliSum& computed,
                                 double scale, double abs_tol);

// Joint fit of one display scale over the listed columns (computed[k] pairs
// with columns[k]); rows that are zero in both the table and the model are
// skipped.
TableValidation validate_scale_fit(const CoefficientTable& table,
                                   std::span<const std::size_t> columns,
                                   std::span<const PauliSum* const> computed,
                                   double rel_tol, double pass_fraction);

struct AppendixReport {
  std::vector<TableValidation> tables;
  bool all_pass = false;
};

// Runs the full shipped-table suite against freshly built models.
AppendixReport validate_appendix(const std::string& data_dir);

void write_validation_report(const std::string& path,
                             const AppendixReport& report);

} // namespace qocsim

#endif // QOCSIM_VALIDATE_HPP
