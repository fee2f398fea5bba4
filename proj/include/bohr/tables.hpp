#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/solver.hpp"

namespace bohr {

inline constexpr double kTableTolerance = 1e-4;

struct FlaggedCell {
  int series = 0;  // index into PaperTable::series
  int alpha = 0;   // index into PaperTable::alphas
  std::string reason;
};

// A published table of radii. Each series is one functional evaluated over
// the alpha grid; `printed[s][a]` is the value as printed, typos included.
struct PaperTable {
  std::string id;
  std::string caption;
  std::vector<double> alphas;
  std::vector<Functional> series;
  std::vector<std::vector<double>> printed;
  // Printed with alpha across the columns (true) or down the rows.
  bool alpha_on_columns = true;
  std::string binding;
  std::vector<FlaggedCell> flagged;

  const FlaggedCell* flag_for(int s, int a) const;
  std::string series_label(int s) const;
  std::size_t cell_count() const { return series.size() * alphas.size(); }
};

enum class CellStatus { kPass, kFlag, kFail };
std::string_view status_name(CellStatus status);

struct CellReport {
  int series = 0;
  int alpha_index = 0;
  double alpha = 0.0;
  Functional functional;
  double printed = 0.0;
  double recomputed = 0.0;  // NaN when the solver failed
  double diff = 0.0;
  CellStatus status = CellStatus::kPass;
  std::string note;
};

struct TableReport {
  std::string id;
  std::optional<Variant> variant_override;
  std::vector<CellReport> cells;  // printed layout, row-major
  int passed = 0;
  int flagged = 0;
  int failed = 0;

  bool ok() const { return failed == 0; }
  // Cells within tolerance regardless of flags.
  int within_tolerance() const;
};

const std::vector<PaperTable>& registry();
// Accepts the ids T1, T2, T4..T8 and TR (also as T3). Throws UnknownTable.
const PaperTable& find_table(const std::string& id);

// Recomputes every cell with the solver defaults under the table's binding,
// or under `variant` for every series when given.
TableReport reproduce(const PaperTable& table,
                      std::optional<Variant> variant = std::nullopt,
                      const SolverOptions& options = {});
TableReport reproduce(const std::string& id,
                      std::optional<Variant> variant = std::nullopt,
                      const SolverOptions& options = {});

std::string row_label(const PaperTable& table, const CellReport& cell);
std::string col_label(const PaperTable& table, const CellReport& cell);

// table_id,row,col,printed,recomputed,diff,status
void write_csv(std::ostream& out, const PaperTable& table,
               const TableReport& report, int precision, bool header = true);
void write_markdown(std::ostream& out, const PaperTable& table,
                    const TableReport& report, int precision);
void write_plain(std::ostream& out, const PaperTable& table,
                 const TableReport& report, int precision);

}  // namespace bohr
