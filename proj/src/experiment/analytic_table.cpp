#include "windsec/experiment/analytic_table.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "csv_util.hpp"
#include "windsec/analytic/analytic.hpp"

namespace windsec::experiment {

const AnalyticRow* AnalyticTable::find(int m, const std::string& quantity) const {
  for (const auto& r : rows)
    if (r.m == m && r.quantity == quantity) return &r;
  return nullptr;
}

std::vector<int> AnalyticTable::m_grid() const {
  std::vector<int> grid;
  for (const auto& r : rows)
    if (std::find(grid.begin(), grid.end(), r.m) == grid.end()) grid.push_back(r.m);
  return grid;
}

AnalyticTable analytic_table(std::span<const int> m_values, int n_max, const AnalyticToggles& toggles) {
  namespace an = windsec::analytic;
  AnalyticTable table;
  auto add = [&](int m, std::string name, const an::Estimate& e) {
    table.rows.push_back({m, std::move(name), e.value, e.err, e.warning});
  };
  for (int m : m_values) {
    if (toggles.areas) {
      add(m, "S", an::mean_S(m));
      add(m, "S0", an::mean_S0(m));
      add(m, "S00", an::mean_S00(m));
    }
    if (toggles.per_n) {
      std::vector<an::Estimate> by_n;
      for (int n = 1; n <= n_max; ++n) by_n.push_back(an::mean_Sn(m, n));
      for (int n = -n_max; n <= n_max; ++n)
        if (n != 0) add(m, "S_" + std::to_string(n), by_n[static_cast<std::size_t>(std::abs(n) - 1)]);
    }
    if (toggles.q && m == 1) {
      const auto s = an::mean_S(1), s0 = an::mean_S0(1);
      const double b = s.value - s0.value;
      an::Estimate q{s0.value / b, s0.err / b + s0.value * (s.err + s0.err) / (b * b), an::Method::quadrature};
      q.warning = s.warning || s0.warning;
      add(m, "q", q);
    }
    if (toggles.asymptotic && m >= 2) add(m, "S_asym", {an::mean_S_asymptotic(m), 0.0, an::Method::asymptotic});
  }
  return table;
}

void write_csv(const AnalyticTable& table, std::ostream& out) {
  out << "m,quantity,value,err,warning\n";
  for (const auto& r : table.rows)
    out << r.m << ',' << r.quantity << ',' << detail::fmt(r.value) << ',' << detail::fmt(r.err) << ','
        << (r.warning ? 1 : 0) << '\n';
}

AnalyticTable read_analytic_csv(std::istream& in) {
  AnalyticTable table;
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw std::runtime_error("analytic table: empty input");
  ++lineno;
  detail::strip_cr(line);
  if (line != "m,quantity,value,err,warning") throw std::runtime_error("analytic table: unexpected header '" + line + "'");
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split(line);
    if (f.size() != 5) throw std::runtime_error("analytic table: line " + std::to_string(lineno) + " needs 5 fields");
    table.rows.push_back({detail::to_int(f[0], lineno), f[1], detail::to_double(f[2], lineno),
                          detail::to_double(f[3], lineno), detail::to_int(f[4], lineno) != 0});
  }
  return table;
}

}  // namespace windsec::experiment
