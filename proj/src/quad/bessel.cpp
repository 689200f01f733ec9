#include "windsec/quad/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace windsec::quad {

double bessel_k_scaled(double alpha, double x, const QuadSpec& spec) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
  const double a = std::abs(alpha);
  if (a > 1.0) throw std::domain_error("bessel_k: |alpha| must be <= 1");
  // exp(-x (cosh u - 1)) cosh(a u), written so that nothing overflows.
  auto integrand = [x, a](double u) {
    const double sh = std::sinh(0.5 * u);
    const double expo = -2.0 * x * sh * sh + a * u;
    return 0.5 * std::exp(expo) * (1.0 + std::exp(-2.0 * a * u));
  };
  return integrate_1d(integrand, SemiInfinite{0.0}, spec).value;
}

double bessel_k(double alpha, double x, const QuadSpec& spec) {
  return std::exp(-x) * bessel_k_scaled(alpha, x, spec);
}

double bessel_i(double nu, double x) {
  if (nu < 0.0) throw std::domain_error("bessel_i: nu must be >= 0");
  if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
  if (x > 50.0) throw std::domain_error("bessel_i: x > 50 is not supported");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;

  // term_k = (x/2)^(2k+nu) / (k! Gamma(k+nu+1)); all terms positive.
  const double half = 0.5 * x;
  const double q = half * half;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int k = 0; k < 10000; ++k) {
    const double ratio = q / ((k + 1.0) * (k + 1.0 + nu));
    term *= ratio;
    sum += term;
    // Later ratios are smaller, so the tail is bounded by a geometric series.
    if (ratio < 1.0) {
      const double next_ratio = q / ((k + 2.0) * (k + 2.0 + nu));
      const double tail = term * next_ratio / (1.0 - next_ratio);
      if (tail <= 1e-17 * sum) break;
    }
  }
  return sum;
}

}  // namespace windsec::quad
