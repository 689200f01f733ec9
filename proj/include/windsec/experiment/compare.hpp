#pragma once

// Pass/fail gates of campaign reports against analytic tables.

#include <iosfwd>
#include <string>
#include <vector>

#include "windsec/experiment/analytic_table.hpp"
#include "windsec/experiment/report.hpp"

namespace windsec::experiment {

enum class GateKind {
  z_score,       // |mc - analytic| <= tol * combined stderr
  abs_window,    // |mc - target| <= tol
  rel_error,     // |mc / analytic - 1| <= tol
};

struct Gate {
  std::string quantity;
  GateKind kind = GateKind::z_score;
  double tol = 3.0;
  int m_min = 1;
  int m_max = 1 << 30;
  double target = 0.0;  // abs_window only
};

// S_n at m = 1 for n = 1, 2, 3 within 3 stderr; q at m = 1 within
// 0.2 +- 0.02; S against the large-m form within 3% for m >= 16.
std::vector<Gate> default_gates();

struct VerdictRow {
  int m = 0;
  std::string quantity;
  std::string gate;
  double mc_value = 0.0;
  double reference = 0.0;
  double statistic = 0.0;  // z, |difference| or relative error
  double tol = 0.0;
  bool pass = false;
};

struct Verdict {
  std::vector<VerdictRow> rows;
  bool all_pass() const;
};

// Analytic values come from the table, not from the report. Throws
// std::invalid_argument for an empty report, mismatched m grids, or when no
// gate applies.
Verdict compare(const CampaignReport& report, const AnalyticTable& analytic,
                const std::vector<Gate>& gates = default_gates());

// Header m,quantity,gate,mc_value,reference,statistic,tol,pass.
void write_csv(const Verdict& verdict, std::ostream& out);

}  // namespace windsec::experiment
