#pragma once

// Campaign results joined with analytic predictions, one row per (m,
// quantity). All areas are in units of t.

#include <iosfwd>
#include <string>
#include <vector>

#include "windsec/experiment/analytic_table.hpp"
#include "windsec/mc/campaign.hpp"

namespace windsec::experiment {

struct ReportRow {
  int m = 0;
  std::string quantity;
  double mc_value = 0.0;
  double mc_stderr = 0.0;
  double analytic_value = 0.0;  // NaN when not computed
  double analytic_err = 0.0;
  double z = 0.0;  // (mc - analytic) / hypot(mc_stderr, analytic_err), NaN without analytic
};

struct CampaignReport {
  std::vector<ReportRow> rows;

  const ReportRow* find(int m, const std::string& quantity) const;
  std::vector<int> m_grid() const;
};

// Rows per m: t, S, S0, S00, S_n for 1 <= |n| <= n_max, then q (m = 1) and
// S_asym (m >= 2, the measured S against the large-m form). analytic may be
// null.
CampaignReport make_report(const mc::CampaignResult& result, const AnalyticTable* analytic);

// Header m,quantity,mc_value,mc_stderr,analytic_value,analytic_err,z;
// numbers as %.10g, so equal results give identical files.
void write_csv(const CampaignReport& report, std::ostream& out);
// Throws std::runtime_error on malformed input.
CampaignReport read_report_csv(std::istream& in);

}  // namespace windsec::experiment
