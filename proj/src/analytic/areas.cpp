#include "windsec/analytic/areas.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "windsec/analytic/memo.hpp"
#include "windsec/analytic/winding_phase.hpp"
#include "windsec/quad/quadrature.hpp"

namespace windsec::analytic {

namespace {

using std::numbers::pi;

struct BitsHash {
  std::size_t operator()(double x) const { return std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(x)); }
};

// The x-quadratures below revisit the same nodes for every m, q and k.
double f_cached(double x) {
  static Memo<double, double, BitsHash> cache;
  return cache.get_or_compute(x, [x] { return f_of_x(x); });
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Estimate to_estimate(const quad::QuadResult& r, double scale) {
  Estimate e{scale * r.value, std::abs(scale) * r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

Estimate combine(const Estimate& a, double ca, const Estimate& b, double cb) {
  Estimate e{ca * a.value + cb * b.value, std::abs(ca) * a.err + std::abs(cb) * b.err, Method::quadrature};
  e.warning = a.warning || b.warning;
  return e;
}

}  // namespace

Estimate phi_q(int m, double q) {
  if (m < 1) throw std::domain_error("phi_q: m must be >= 1");
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("phi_q: q must lie in [0, 1)");
  auto g = [m, q](double x) { return -std::expm1(m * std::log1p(-(1.0 - q) * f_cached(x))); };
  const auto spec = quad::QuadSpec::for_dimension(1);
  if (m < 64) return to_estimate(quad::integrate_pieces(g, transition_breaks(m), spec), pi);

  // Step-like integrand: rescale x = y ln(m)/2 so the step sits at y = 1
  // with width O(1/ln m).
  const double L = 0.5 * std::log(static_cast<double>(m));
  const double w = 1.0 / L;
  std::vector<double> breaks{0.0};
  for (double b : {w, 1.0 - 2.0 * w, 1.0, 1.0 + 2.0 * w})
    if (b > breaks.back()) breaks.push_back(b);
  breaks.push_back(quad::inf);
  const auto r = quad::integrate_pieces([&](double y) { return g(y * L); }, breaks, spec);
  return to_estimate(r, pi * L);
}

Estimate A_k(int m, int k) {
  if (k < 1 || k > m) throw std::domain_error("A_k: need 1 <= k <= m");
  const double c = binom(m, k);
  auto g = [m, k](double x) {
    const double f = f_cached(x);
    return std::exp(k * std::log(f) + (m - k) * std::log1p(-f));
  };
  return to_estimate(quad::integrate_pieces(g, transition_breaks(m), quad::QuadSpec::for_dimension(1)),
                     c * pi);
}

Estimate mean_S(int m, double q) { return combine(phi_q(m, 0.0), 2.0, phi_q(m, q), -1.0); }

Estimate mean_S00(int m, double q) { return combine(phi_q(m, 0.0), 1.0, phi_q(m, q), -1.0); }

Estimate sum_Sn(int m) {
  if (m < 1) throw std::domain_error("sum_Sn: m must be >= 1");
  const auto r = quad::integrate_1d([m](double a) { return z_alpha(m, a).value; }, quad::Finite{0.0, 0.5},
                                    quad::QuadSpec::for_dimension(1));
  return to_estimate(r, 2.0);
}

Estimate mean_S0(int m, double q) { return combine(mean_S(m, q), 1.0, sum_Sn(m), -1.0); }

double mean_S_asymptotic(int m) {
  if (m < 2) throw std::domain_error("large-m form needs m >= 2");
  const double lm = std::log(static_cast<double>(m));
  return 0.5 * pi * lm - 0.25 * pi * std::log(lm) +
         0.5 * pi * (0.5 * std::log(25.0 / (4.0 * pi * pi * pi)) + kEulerGamma);
}

double mean_S_minus_S0_asymptotic(int m) {
  if (m < 2) throw std::domain_error("large-m form needs m >= 2");
  const double lm = std::log(static_cast<double>(m));
  return 0.5 * pi * lm - 0.25 * pi * std::log(lm) + 0.5 * pi * (-0.5 * std::log(4.0 * pi) + kEulerGamma);
}

double s0_limit() { return 0.5 * pi * std::log(5.0 / pi); }

double phi_q_asymptotic(int m, double q) {
  if (m < 3) throw std::domain_error("phi_q_asymptotic: m must be >= 3");
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("phi_q_asymptotic: q must lie in [0, 1)");
  const double lm = std::log(static_cast<double>(m));
  // Beyond the step (y > 1) the integrand is linear in the small exponent;
  // below it, exp(-a' m^{1-y}) integrates to an exponential integral.
  const double a_prime = (1.0 - q) / (pi * pi) * std::sqrt(4.0 * pi / lm);
  const double a = (1.0 - q) / std::sqrt(pi * lm);
  const double b = 0.5 * pi * (std::log(a_prime) + kEulerGamma - a_prime);
  return 0.5 * pi * lm + a + b;
}

}  // namespace windsec::analytic
