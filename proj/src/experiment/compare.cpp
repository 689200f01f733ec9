#include "windsec/experiment/compare.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "csv_util.hpp"

namespace windsec::experiment {

std::vector<Gate> default_gates() {
  std::vector<Gate> g;
  for (int n = 1; n <= 3; ++n) g.push_back({"S_" + std::to_string(n), GateKind::z_score, 3.0, 1, 1});
  g.push_back({"q", GateKind::abs_window, 0.02, 1, 1, 0.2});
  g.push_back({"S_asym", GateKind::rel_error, 0.03, 16});
  return g;
}

bool Verdict::all_pass() const {
  if (rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

std::string describe(const Gate& g) {
  switch (g.kind) {
    case GateKind::z_score: return "|z|<=" + detail::fmt(g.tol);
    case GateKind::abs_window: return "|x-" + detail::fmt(g.target) + "|<=" + detail::fmt(g.tol);
    case GateKind::rel_error: return "rel<=" + detail::fmt(g.tol);
  }
  return "?";
}

}  // namespace

Verdict compare(const CampaignReport& report, const AnalyticTable& analytic, const std::vector<Gate>& gates) {
  if (report.rows.empty()) throw std::invalid_argument("compare: empty report");
  if (report.m_grid() != analytic.m_grid()) throw std::invalid_argument("compare: report and analytic table have different m grids");

  Verdict v;
  for (const auto& r : report.rows) {
    for (const auto& g : gates) {
      if (g.quantity != r.quantity || r.m < g.m_min || r.m > g.m_max) continue;
      VerdictRow row{r.m, r.quantity, describe(g), r.mc_value, 0.0, 0.0, g.tol, false};
      if (g.kind == GateKind::abs_window) {
        row.reference = g.target;
        row.statistic = std::abs(r.mc_value - g.target);
      } else {
        const AnalyticRow* a = analytic.find(r.m, r.quantity);
        if (!a) throw std::invalid_argument("compare: analytic table lacks " + r.quantity + " at m = " + std::to_string(r.m));
        row.reference = a->value;
        if (g.kind == GateKind::z_score) {
          const double se = std::hypot(r.mc_stderr, a->err);
          row.statistic = std::abs(r.mc_value - a->value) / se;
        } else {
          row.statistic = std::abs(r.mc_value / a->value - 1.0);
        }
      }
      // NaN statistics fail.
      row.pass = row.statistic <= g.tol;
      v.rows.push_back(std::move(row));
    }
  }
  if (v.rows.empty()) throw std::invalid_argument("compare: no gate applies to this report");
  return v;
}

void write_csv(const Verdict& verdict, std::ostream& out) {
  out << "m,quantity,gate,mc_value,reference,statistic,tol,pass\n";
  for (const auto& r : verdict.rows)
    out << r.m << ',' << r.quantity << ',' << r.gate << ',' << detail::fmt(r.mc_value) << ','
        << detail::fmt(r.reference) << ',' << detail::fmt(r.statistic) << ',' << detail::fmt(r.tol) << ','
        << (r.pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace windsec::experiment
