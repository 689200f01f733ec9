#include "windsec/experiment/report.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "csv_util.hpp"

namespace windsec::experiment {

namespace {

constexpr const char* kHeader = "m,quantity,mc_value,mc_stderr,analytic_value,analytic_err,z";
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const ReportRow* CampaignReport::find(int m, const std::string& quantity) const {
  for (const auto& r : rows)
    if (r.m == m && r.quantity == quantity) return &r;
  return nullptr;
}

std::vector<int> CampaignReport::m_grid() const {
  std::vector<int> grid;
  for (const auto& r : rows)
    if (std::find(grid.begin(), grid.end(), r.m) == grid.end()) grid.push_back(r.m);
  return grid;
}

CampaignReport make_report(const mc::CampaignResult& result, const AnalyticTable* analytic) {
  const auto names = mc::observable_names(result.config.n_max);
  CampaignReport report;
  auto add = [&](int m, const std::string& name, mc::Measured x, const std::string& analytic_name) {
    ReportRow row{m, name, x.value, x.stderr_, kNaN, kNaN, kNaN};
    if (const AnalyticRow* a = analytic ? analytic->find(m, analytic_name) : nullptr) {
      row.analytic_value = a->value;
      row.analytic_err = a->err;
      const double se = std::hypot(x.stderr_, a->err);
      row.z = se > 0 ? (x.value - a->value) / se : kNaN;
    }
    report.rows.push_back(std::move(row));
  };
  for (const auto& s : result.per_m) {
    report.rows.push_back({s.m, "t", s.t, 0.0, kNaN, kNaN, kNaN});
    for (std::size_t k = 0; k < names.size(); ++k) add(s.m, names[k], s.mean(k), names[k]);
    if (s.m == 1) add(s.m, "q", s.q(), "q");
    if (s.m >= 2) add(s.m, "S_asym", s.mean(mc::kObsS), "S_asym");
  }
  return report;
}

void write_csv(const CampaignReport& report, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& r : report.rows)
    out << r.m << ',' << r.quantity << ',' << detail::fmt(r.mc_value) << ',' << detail::fmt(r.mc_stderr) << ','
        << detail::fmt(r.analytic_value) << ',' << detail::fmt(r.analytic_err) << ',' << detail::fmt(r.z) << '\n';
}

CampaignReport read_report_csv(std::istream& in) {
  CampaignReport report;
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw std::runtime_error("report: empty input");
  detail::strip_cr(line);
  if (line != kHeader) throw std::runtime_error("report: unexpected header '" + line + "'");
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split(line);
    if (f.size() != 7) throw std::runtime_error("report: line " + std::to_string(lineno) + " needs 7 fields");
    report.rows.push_back({detail::to_int(f[0], lineno), f[1], detail::to_double(f[2], lineno),
                           detail::to_double(f[3], lineno), detail::to_double(f[4], lineno),
                           detail::to_double(f[5], lineno), detail::to_double(f[6], lineno)});
  }
  return report;
}

}  // namespace windsec::experiment
