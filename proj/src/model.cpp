#include "bohr/model.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/kernel.hpp"

namespace bohr {

namespace {

void require_radius(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError(std::string(what) + ": r must lie in [0,1)");
  }
}

// Bounds are compared with a relative slack so that values written out with
// 17 significant digits read back as valid.
constexpr double kBoundSlack = 1e-12;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ProfileError("profile line " + std::to_string(line) +
                     ": not a number: '" + text + "'");
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value < 1.0)) {
    throw DomainError("alpha must lie in [0,1), got " + std::to_string(value));
  }
}

double coeff_bound(int n, Alpha alpha) {
  if (n < 2) {
    throw DomainError("coeff_bound: n must be >= 2, got " + std::to_string(n));
  }
  return 2.0 * alpha.complement() / n;
}

double distance_bound(Alpha alpha) {
  return 1.0 + 2.0 * alpha.complement() * (std::numbers::ln2 - 1.0);
}

double majorant(double r, Alpha alpha) {
  require_radius(r, "majorant");
  return r - 2.0 * alpha.complement() * (r + std::log1p(-r));
}

double minorant(double r, Alpha alpha) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("minorant: r must lie in [0,1]");
  }
  return r + 2.0 * alpha.complement() * alt_log_tail(r);
}

double jacobian_sqrt_bound(double r, Alpha alpha) {
  require_radius(r, "jacobian_sqrt_bound");
  return alpha.value() + alpha.complement() * (1.0 + r) / (1.0 - r);
}

CoefficientProfile CoefficientProfile::extremal(Alpha alpha) {
  CoefficientProfile p(alpha);
  p.second_ = alpha.complement();
  p.extremal_ = true;
  return p;
}

CoefficientProfile CoefficientProfile::from_rows(
    Alpha alpha, const std::vector<ProfileRow>& rows) {
  CoefficientProfile p(alpha);
  int max_n = 1;
  for (const auto& row : rows) max_n = std::max(max_n, row.n);
  std::vector<bool> seen(max_n + 1, false);
  if (max_n >= 2) {
    p.sums_.resize(max_n - 1);
    p.as_.resize(max_n - 1);
    for (int n = 2; n <= max_n; ++n) {
      p.sums_[n - 2] = p.as_[n - 2] = coeff_bound(n, alpha);
    }
  }

  bool saturated = true;
  for (const auto& row : rows) {
    const std::string where = "profile row n=" + std::to_string(row.n);
    if (row.n < 2) throw ProfileError(where + ": n must be >= 2");
    if (seen[row.n]) throw ProfileError(where + ": listed twice");
    seen[row.n] = true;
    const double bound = coeff_bound(row.n, alpha);
    const double limit = bound * (1.0 + kBoundSlack);
    if (!(row.sum_bound >= 0.0 && row.sum_bound <= limit)) {
      throw ProfileError(where + ": |a_n|+|b_n| bound must lie in [0, " +
                         std::to_string(bound) + "]");
    }
    if (!(row.a_bound >= 0.0 && row.a_bound <= limit)) {
      throw ProfileError(where + ": |a_n| bound must lie in [0, " +
                         std::to_string(bound) + "]");
    }
    if (row.a_bound > row.sum_bound * (1.0 + kBoundSlack)) {
      throw ProfileError(where + ": |a_n| bound exceeds |a_n|+|b_n| bound");
    }
    p.sums_[row.n - 2] = std::min(row.sum_bound, bound);
    p.as_[row.n - 2] = std::min(row.a_bound, bound);
    saturated = saturated && row.sum_bound >= bound * (1.0 - kBoundSlack) &&
                row.a_bound >= bound * (1.0 - kBoundSlack);
  }
  if (max_n >= 2 && seen[2]) p.second_ = p.sums_[0];
  p.extremal_ = saturated;
  return p;
}

double CoefficientProfile::sum_bound(int n) const {
  if (n - 2 < static_cast<int>(sums_.size())) {
    if (n < 2) throw DomainError("sum_bound: n must be >= 2");
    return sums_[n - 2];
  }
  return coeff_bound(n, alpha_);
}

double CoefficientProfile::a_bound(int n) const {
  if (n - 2 < static_cast<int>(as_.size())) {
    if (n < 2) throw DomainError("a_bound: n must be >= 2");
    return as_[n - 2];
  }
  return coeff_bound(n, alpha_);
}

CoefficientProfile extremal_profile(Alpha alpha) {
  return CoefficientProfile::extremal(alpha);
}

CoefficientProfile read_profile(std::istream& in) {
  std::optional<double> alpha;
  bool header_seen = false;
  std::vector<ProfileRow> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!alpha) {
      const auto eq = text.find('=');
      if (eq == std::string::npos || trim(text.substr(0, eq)) != "alpha") {
        throw ProfileError("profile line " + std::to_string(line) +
                           ": expected 'alpha=<value>' preamble");
      }
      alpha = parse_number(trim(text.substr(eq + 1)), line);
      continue;
    }
    if (!header_seen) {
      std::string compact;
      for (char ch : text) {
        if (ch != ' ' && ch != '\t') compact += ch;
      }
      if (compact != "n,c_n,a_n_bound") {
        throw ProfileError("profile line " + std::to_string(line) +
                           ": expected header 'n,c_n,a_n_bound'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 3) {
      throw ProfileError("profile line " + std::to_string(line) +
                         ": expected 3 comma-separated fields");
    }
    const double n = parse_number(fields[0], line);
    if (n != std::floor(n) || n < 2 || n > 1e6) {
      throw ProfileError("profile line " + std::to_string(line) +
                         ": n must be an integer >= 2");
    }
    rows.push_back(ProfileRow{static_cast<int>(n), parse_number(fields[1], line),
                              parse_number(fields[2], line)});
  }
  if (!alpha) throw ProfileError("profile: missing 'alpha=<value>' preamble");
  if (!header_seen) throw ProfileError("profile: missing header row");
  try {
    return CoefficientProfile::from_rows(Alpha(*alpha), rows);
  } catch (const DomainError& e) {
    throw ProfileError(std::string("profile: ") + e.what());
  }
}

}  // namespace bohr
