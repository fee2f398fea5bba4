#include "bohr/tables.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "bohr/errors.hpp"
#include "bohr/format.hpp"

namespace bohr {

namespace {

const std::vector<double> kAlphaGrid{0.1, 0.2, 0.3, 0.4, 0.5,
                                     0.6, 0.7, 0.8, 0.9};

// Rows indexed by alpha, columns by series, as laid out on the page.
std::vector<std::vector<double>> transpose(
    const std::vector<std::vector<double>>& by_alpha) {
  std::vector<std::vector<double>> out(by_alpha.front().size(),
                                       std::vector<double>(by_alpha.size()));
  for (std::size_t a = 0; a < by_alpha.size(); ++a) {
    for (std::size_t s = 0; s < by_alpha[a].size(); ++s) {
      out[s][a] = by_alpha[a][s];
    }
  }
  return out;
}

std::vector<PaperTable> build_registry() {
  std::vector<PaperTable> tables;

  {
    PaperTable t;
    t.id = "T1";
    t.caption = "r_N(alpha) for the Bohr-Rogosinski sum, N = 2, 3, 6, 10";
    t.alphas = kAlphaGrid;
    for (int n : {2, 3, 6, 10}) t.series.push_back(Functional::rogosinski(n));
    t.printed = {
        {.2771, .3115, .3477, .3866, .4296, .4785, .5367, .6109, .7187},
        {.3121, .3493, .3877, .4281, .4717, .5201, .5764, .6463, .7453},
        {.3248, .3653, .4070, .4508, .4978, .5493, .6080, .6786, .7736},
        {.3251, .3657, .4978, .4522, .4999, .5527, .6130, .6859, .7832},
    };
    t.binding = "rogosinski, statement and proof agree";
    t.flagged = {{3, 2,
                  "breaks row monotonicity (neighbours 0.3657, 0.4522); "
                  "suspected transposition typo of 0.4078"}};
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T2";
    t.caption = "r_N(alpha) for |f|^2 plus the |a_n| tail, N = 3, 8";
    t.alphas = kAlphaGrid;
    for (int n : {3, 8}) {
      t.series.push_back(Functional::rogosinski_squared(n).with(Variant::kProof));
    }
    t.printed = {
        {.4102, .4399, .4708, .5038, .5399, .5807, .6291, .6903, .7783},
        {.4304, .4613, .4933, .5273, .5644, .6060, .6547, .7152, .7994},
    };
    t.binding = "rogosinski-squared, proof variant";
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "TR";
    t.caption = "refined radius r_N(alpha), N = 2, 25";
    t.alphas = kAlphaGrid;
    for (int n : {2, 25}) t.series.push_back(Functional::refined_weighted(n));
    t.printed = {
        {.3148, .3527, .3920, .4338, .4793, .5304, .5904, .6651, .7693},
        {.3158, .3542, .3942, .4368, .4835, .5361, .5977, .6741, .7792},
    };
    t.binding = "refined-weighted, statement and proof agree";
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T4";
    t.caption = "r_{m,N}(alpha) for |f(z^m)|, N = 2, m = 2, 3, 7, 25, 50, 90, 150";
    t.alphas = kAlphaGrid;
    for (int m : {2, 3, 7, 25, 50, 90, 150}) {
      t.series.push_back(
          Functional::powered_argument(m, 2).with(Variant::kAlternate));
    }
    t.printed = transpose({
        {.2016, .2157, .2201, .2201, .2201, .2202, .2202},
        {.2436, .2639, .2724, .2725, .2725, .2725, .2725},
        {.2905, .3187, .3344, .3346, .3346, .3346, .3346},
        {.3433, .3805, .4083, .4093, .4093, .4093, .4093},
        {.4030, .4499, .4962, .5000, .5000, .5000, .5000},
        {.4710, .5268, .5970, .6105, .6106, .6106, .6106},
        {.5498, .6119, .7031, .7430, .7433, .7433, .7433},
        {.6443, .7069, .8033, .8772, .8877, .8884, .8884},
        {.7667, .8184, .8944, .9542, .9707, .9796, .9848},
    });
    t.alpha_on_columns = false;
    t.binding =
        "powered-argument, alternate variant (partial sum without the r term)";
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T5";
    t.caption =
        "r_{m,N}(alpha) for |f(z^m)|, N = 3 (m = 5, 15, 35, 85, 180) and "
        "N = 5 (m = 5, 15, 35)";
    t.alphas = kAlphaGrid;
    for (int m : {5, 15, 35, 85, 180}) {
      t.series.push_back(Functional::powered_argument(m, 3).with(Variant::kProof));
    }
    for (int m : {5, 15, 35}) {
      t.series.push_back(Functional::powered_argument(m, 5).with(Variant::kProof));
    }
    t.printed = transpose({
        {.6435, .6922, .6936, .6936, .6936, .7283, .8048, .8145},
        {.6744, .7298, .7326, .7326, .7326, .7503, .8371, .8397},
        {.7045, .7664, .7716, .7716, .7716, .7717, .8479, .8639},
        {.7344, .8019, .8109, .8111, .8111, .7930, .8678, .8872},
        {.7647, .8360, .8508, .8515, .8515, .8147, .8870, .9094},
        {.7902, .8687, .8901, .8930, .8930, .8374, .9057, .9300},
        {.8299, .8996, .9257, .9345, .9349, .8621, .9345, .9486},
        {.8677, .9293, .9545, .9686, .9732, .8905, .9440, .9653},
        {.9141, .9593, .9771, .9875, .9924, .9267, .9657, .9807},
    });
    t.alpha_on_columns = false;
    t.binding = "powered-argument, proof variant (full partial sum)";
    t.flagged = {
        {0, 5, "not reproduced by any reading; column trend gives ~0.7962"},
        {6, 1, "not reproduced by any reading; column steps 0.8048 -> 0.8371 "
               "-> 0.8479 are uneven"},
        {6, 6, "not reproduced by any reading; equals the printed m=85, N=3 "
               "entry in the same row"},
        {7, 8, "not reproduced by any reading; recomputed 0.98087 rounds to "
               "0.9809"},
    };
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T6";
    t.caption = "r_p(alpha) for r + |h(r)|^p, p = 7, 35";
    t.alphas = kAlphaGrid;
    for (int p : {7, 35}) t.series.push_back(Functional::analytic_power(p));
    t.printed = {
        {.3249, .3653, .4069, .4503, .4963, .5456, .5992, .6579, .7231},
        {.3251, .3657, .4078, .4522, .5000, .5529, .6136, .6872, .7867},
    };
    t.binding = "analytic-power with the r^p term";
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T7";
    t.caption = "r_N(alpha) for the majorant plus P(S_r/pi), N = 2, 3, 4, 5";
    t.alphas = kAlphaGrid;
    for (int n : {2, 3, 4, 5}) {
      t.series.push_back(Functional::area_polynomial(n).with(Variant::kProof));
    }
    t.printed = {
        {.2734, .3027, .3320, .3618, .3923, .4241, .4574, .4927, .5303},
        {.2732, .3023, .3314, .3607, .3907, .4217, .4540, .4878, .5230},
        {.2732, .3023, .3313, .3606, .3905, .4213, .4533, .4867, .5212},
        {.2732, .3023, .3313, .3606, .3904, .4213, .4532, .4864, .5208},
    };
    t.binding = "area-polynomial, P of degree N";
    tables.push_back(std::move(t));
  }

  {
    PaperTable t;
    t.id = "T8";
    t.caption = "r(alpha) for the majorant plus S_r/pi";
    t.alphas = kAlphaGrid;
    t.series.push_back(Functional::area_linear().with(Variant::kStatement));
    t.printed = {
        {.2322, .2635, .2967, .3323, .3707, .4125, .4579, .5074, .5610},
    };
    t.binding = "area-linear, statement variant";
    tables.push_back(std::move(t));
  }

  return tables;
}

std::string format_alpha(double alpha) { return fixed(alpha, 1); }

}  // namespace

const FlaggedCell* PaperTable::flag_for(int s, int a) const {
  for (const auto& f : flagged) {
    if (f.series == s && f.alpha == a) return &f;
  }
  return nullptr;
}

std::string PaperTable::series_label(int s) const {
  const auto& f = series.at(s);
  std::string label = f.label();
  const auto open = label.find('(');
  if (open == std::string::npos) return "r";
  return label.substr(open + 1, label.size() - open - 2);
}

std::string_view status_name(CellStatus status) {
  switch (status) {
    case CellStatus::kPass:
      return "pass";
    case CellStatus::kFlag:
      return "flag";
    case CellStatus::kFail:
      return "fail";
  }
  return "?";
}

int TableReport::within_tolerance() const {
  int n = 0;
  for (const auto& c : cells) {
    if (std::isfinite(c.diff) && c.diff <= kTableTolerance) ++n;
  }
  return n;
}

const std::vector<PaperTable>& registry() {
  static const std::vector<PaperTable> tables = build_registry();
  return tables;
}

const PaperTable& find_table(const std::string& id) {
  const std::string key = id == "T3" ? "TR" : id;
  for (const auto& t : registry()) {
    if (t.id == key) return t;
  }
  throw UnknownTable("unknown table id '" + id + "'");
}

TableReport reproduce(const PaperTable& table, std::optional<Variant> variant,
                      const SolverOptions& options) {
  std::vector<Functional> series = table.series;
  if (variant) {
    for (auto& f : series) f = f.with(*variant);
  }

  TableReport report;
  report.id = table.id;
  report.variant_override = variant;

  const auto cell = [&](int s, int a) {
    CellReport c;
    c.series = s;
    c.alpha_index = a;
    c.alpha = table.alphas[a];
    c.functional = series[s];
    c.printed = table.printed[s][a];
    try {
      c.recomputed = solve(radius_equation(c.functional, Alpha(c.alpha)), options).root;
      c.diff = std::fabs(c.recomputed - c.printed);
    } catch (const SolverError& e) {
      c.recomputed = std::numeric_limits<double>::quiet_NaN();
      c.diff = std::numeric_limits<double>::infinity();
      c.note = e.what();
    }
    if (const auto* flag = table.flag_for(s, a)) {
      c.status = CellStatus::kFlag;
      c.note = flag->reason;
      ++report.flagged;
    } else if (c.diff <= kTableTolerance) {
      c.status = CellStatus::kPass;
      ++report.passed;
    } else {
      c.status = CellStatus::kFail;
      ++report.failed;
    }
    report.cells.push_back(std::move(c));
  };

  const int ns = static_cast<int>(series.size());
  const int na = static_cast<int>(table.alphas.size());
  if (table.alpha_on_columns) {
    for (int s = 0; s < ns; ++s) {
      for (int a = 0; a < na; ++a) cell(s, a);
    }
  } else {
    for (int a = 0; a < na; ++a) {
      for (int s = 0; s < ns; ++s) cell(s, a);
    }
  }
  return report;
}

TableReport reproduce(const std::string& id, std::optional<Variant> variant,
                      const SolverOptions& options) {
  return reproduce(find_table(id), variant, options);
}

std::string row_label(const PaperTable& table, const CellReport& cell) {
  return table.alpha_on_columns ? table.series_label(cell.series)
                                : format_alpha(cell.alpha);
}

std::string col_label(const PaperTable& table, const CellReport& cell) {
  return table.alpha_on_columns ? format_alpha(cell.alpha)
                                : table.series_label(cell.series);
}

void write_csv(std::ostream& out, const PaperTable& table,
               const TableReport& report, int precision, bool header) {
  if (header) out << "table_id,row,col,printed,recomputed,diff,status\n";
  for (const auto& c : report.cells) {
    std::string row = row_label(table, c);
    std::string col = col_label(table, c);
    // series labels like m=2,N=2 contain the separator
    if (row.find(',') != std::string::npos) row = '"' + row + '"';
    if (col.find(',') != std::string::npos) col = '"' + col + '"';
    out << report.id << ',' << row << ',' << col << ',' << fixed(c.printed, 4)
        << ',' << fixed(c.recomputed, precision) << ','
        << (std::isfinite(c.diff) ? sci(c.diff) : "inf") << ','
        << status_name(c.status) << '\n';
  }
}

void write_markdown(std::ostream& out, const PaperTable& table,
                    const TableReport& report, int precision) {
  const int ns = static_cast<int>(table.series.size());
  const int na = static_cast<int>(table.alphas.size());
  const auto find = [&report](int s, int a) -> const CellReport& {
    for (const auto& c : report.cells) {
      if (c.series == s && c.alpha_index == a) return c;
    }
    throw std::logic_error("missing cell");
  };
  const auto render = [precision](const CellReport& c) {
    std::string text = fixed(c.recomputed, precision);
    if (c.status != CellStatus::kPass) {
      text += " (printed " + fixed(c.printed, 4) + ", " +
              std::string(status_name(c.status)) + ")";
    }
    return text;
  };

  out << "**" << table.id << "**: " << table.caption << "\n\n";
  if (table.alpha_on_columns) {
    out << "| alpha |";
    for (double a : table.alphas) out << ' ' << format_alpha(a) << " |";
    out << "\n|---|";
    for (int a = 0; a < na; ++a) out << "---|";
    out << '\n';
    for (int s = 0; s < ns; ++s) {
      out << "| " << table.series_label(s) << " |";
      for (int a = 0; a < na; ++a) out << ' ' << render(find(s, a)) << " |";
      out << '\n';
    }
  } else {
    out << "| alpha |";
    for (int s = 0; s < ns; ++s) out << ' ' << table.series_label(s) << " |";
    out << "\n|---|";
    for (int s = 0; s < ns; ++s) out << "---|";
    out << '\n';
    for (int a = 0; a < na; ++a) {
      out << "| " << format_alpha(table.alphas[a]) << " |";
      for (int s = 0; s < ns; ++s) out << ' ' << render(find(s, a)) << " |";
      out << '\n';
    }
  }
  out << "\npass " << report.passed << ", flag " << report.flagged
      << ", fail " << report.failed << '\n';
  for (const auto& c : report.cells) {
    if (c.status == CellStatus::kPass) continue;
    out << "- " << row_label(table, c) << " / " << col_label(table, c) << ": "
        << status_name(c.status);
    if (!c.note.empty()) out << ", " << c.note;
    out << '\n';
  }
}

void write_plain(std::ostream& out, const PaperTable& table,
                 const TableReport& report, int precision) {
  for (const auto& c : report.cells) {
    out << report.id << ' ' << row_label(table, c) << ' '
        << col_label(table, c) << " printed=" << fixed(c.printed, 4)
        << " recomputed=" << fixed(c.recomputed, precision)
        << " diff=" << (std::isfinite(c.diff) ? sci(c.diff) : "inf") << ' '
        << status_name(c.status) << '\n';
  }
  out << report.id << " pass=" << report.passed << " flag=" << report.flagged
      << " fail=" << report.failed << '\n';
}

}  // namespace bohr
