#include "windsec/analytic/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "windsec/analytic/winding_phase.hpp"
#include "windsec/quad/bessel.hpp"

namespace windsec::analytic {

namespace {

using std::numbers::pi;

// exp(-x) K_0(x)
double ek0(double x) { return std::exp(-2.0 * x) * quad::bessel_k_scaled(0.0, x); }

// exp(-x) int_0^inf du exp(-x cosh u) u tanh(u/2)
double eh(double x) {
  auto g = [x](double u) {
    const double sh = std::sinh(0.5 * u);
    const double e = std::exp(-2.0 * x * sh * sh);
    return e == 0.0 ? 0.0 : e * u * std::tanh(0.5 * u);
  };
  return std::exp(-2.0 * x) * quad::integrate_1d(g, quad::SemiInfinite{0.0}, {}).value;
}

// K_0 is logarithmic at the origin; split there so [0,1] gets the
// endpoint-clustered finite transform.
template <class F>
Estimate x_integral(F&& f) {
  constexpr std::array<double, 3> breaks{0.0, 1.0, quad::inf};
  const auto r = quad::integrate_pieces(f, breaks, quad::QuadSpec::for_dimension(1));
  Estimate e{r.value, r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

}  // namespace

Estimate constant_cj(int j) {
  if (j < 1) throw std::invalid_argument("c_j: j must be >= 1");
  return x_integral([j](double x) { return std::pow(ek0(x), j); });
}

Estimate constant_dj(int j) {
  if (j < 1) throw std::invalid_argument("d_j: j must be >= 1");
  return x_integral([j](double x) { return std::pow(ek0(x), j - 1) * eh(x); });
}

Estimate constant_cjm(int j, int m) {
  if (j < 1 || m < j) throw std::invalid_argument("c_{j,m}: need 1 <= j <= m");
  if (m == j) return constant_cj(j);
  return x_integral([j, m](double x) {
    return std::pow(ek0(x), j) * std::exp((m - j) * std::log1p(-f_of_x(x)));
  });
}

Estimate c22_series() {
  constexpr long K = 1L << 19;
  const double w = pi * pi / 4.0;
  // Partial sums at K, 2K, 4K.
  std::array<double, 3> partial{};
  double a = 1.0;
  double b = 1.0;
  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  int slot = 0;
  for (long k = 1; k <= 4 * K; ++k) {
    const double r1 = 1.0 - 0.5 / static_cast<double>(k);
    const double r2 = 1.0 - 1.0 / (2.0 * static_cast<double>(k) + 1.0);
    a *= r1 * r1;
    b *= r2 * r2;
    const double y = (w * a - b) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (k == (K << slot)) partial[slot++] = sum;
  }
  // Tail of sum_k ~ A/k^2 + B/k^3: partial sums behave as S - A/K - B'/K^2.
  const double r1k = 2.0 * partial[1] - partial[0];
  const double r12k = 2.0 * partial[2] - partial[1];
  const double r2 = (4.0 * r12k - r1k) / 3.0;
  return {w - 1.0 + r2, std::abs(r2 - r12k), Method::series};
}

const ModelConstants& model_constants() {
  static const ModelConstants c = [] {
    ModelConstants k;
    for (int j = 1; j <= 4; ++j) k.c_j.push_back(constant_cj(j).value);
    k.d_j = {constant_dj(2).value, constant_dj(4).value};
    k.d2 = k.d_j[0];
    k.c3 = k.c_j[2];
    for (int m = 1; m <= 3; ++m) {
      std::vector<double> row;
      for (int j = 1; j <= m; ++j) row.push_back(j == m ? k.c_j[j - 1] : constant_cjm(j, m).value);
      k.c_jm.push_back(std::move(row));
    }
    return k;
  }();
  return c;
}

}  // namespace windsec::analytic
