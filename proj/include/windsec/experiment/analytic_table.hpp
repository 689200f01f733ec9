#pragma once

// Analytic predictions on a campaign's m grid, in units of t.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace windsec::experiment {

struct AnalyticToggles {
  bool areas = true;       // S, S0, S00
  bool per_n = true;       // S_n for 1 <= |n| <= n_max
  bool q = true;           // q at m = 1
  bool asymptotic = true;  // S_asym for m >= 2
};

struct AnalyticRow {
  int m = 0;
  std::string quantity;  // as in observable_names(), plus "q" and "S_asym"
  double value = 0.0;
  double err = 0.0;
  bool warning = false;
};

struct AnalyticTable {
  std::vector<AnalyticRow> rows;

  const AnalyticRow* find(int m, const std::string& quantity) const;
  // Distinct m values in order of first appearance.
  std::vector<int> m_grid() const;
};

AnalyticTable analytic_table(std::span<const int> m_values, int n_max, const AnalyticToggles& toggles = {});

// CSV with header m,quantity,value,err,warning.
void write_csv(const AnalyticTable& table, std::ostream& out);
// Throws std::runtime_error on malformed input.
AnalyticTable read_analytic_csv(std::istream& in);

}  // namespace windsec::experiment
