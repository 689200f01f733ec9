#include "windsec/analytic/winding_phase.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "windsec/analytic/memo.hpp"
#include "windsec/quad/bessel.hpp"

namespace windsec::analytic {

using std::numbers::pi;

quad::QuadSpec inner_spec() {
  quad::QuadSpec s;
  s.rel_tol = 1e-12;
  s.max_levels = 12;
  return s;
}

double one_minus_g_alpha(double alpha, double x, const quad::QuadSpec& spec) {
  if (!(x >= 0.0)) throw std::domain_error("G_alpha: x must be >= 0");
  const double beta = WindingPhase::reduce(alpha).alpha;
  if (beta == 0.0) return 0.0;
  if (x == 0.0) return 1.0;
  // exp(-x(1+cosh u)) = exp(-2x) exp(-2x sinh^2(u/2)); for u >= 0
  // cosh((1/2-beta)u)/cosh(u/2) = (e^{-beta u} + e^{-(1-beta)u}) / (1 + e^{-u}).
  auto integrand = [x, beta](double u) {
    const double sh = std::sinh(0.5 * u);
    const double e = std::exp(-2.0 * x * sh * sh - beta * u);
    if (e == 0.0) return 0.0;
    return e * (1.0 + std::exp(-(1.0 - 2.0 * beta) * u)) / (1.0 + std::exp(-u));
  };
  const auto r = quad::integrate_1d(integrand, quad::SemiInfinite{0.0}, spec);
  return std::sin(beta * pi) / pi * std::exp(-2.0 * x) * r.value;
}

double g_alpha(double alpha, double x, const quad::QuadSpec& spec) {
  const double w = one_minus_g_alpha(alpha, x, spec);
  return std::clamp(1.0 - w, 0.0, 1.0);
}

double dg_alpha_dx(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("dG/dx: x must be > 0");
  const double beta = WindingPhase::reduce(alpha).alpha;
  if (beta == 0.0) return 0.0;
  return std::sin(beta * pi) / pi * std::exp(-x) *
         (quad::bessel_k(beta, x) + quad::bessel_k(1.0 - beta, x));
}

double f_of_x_scaled(double x, const quad::QuadSpec& spec) {
  if (!(x >= 0.0)) throw std::domain_error("f(x): x must be >= 0");
  auto integrand = [x](double u) {
    const double sh = std::sinh(0.5 * u);
    const double e = x == 0.0 ? 1.0 : std::exp(-2.0 * x * sh * sh);
    return e / (u * u + pi * pi);
  };
  return 2.0 * quad::integrate_1d(integrand, quad::SemiInfinite{0.0}, spec).value;
}

double f_of_x(double x, const quad::QuadSpec& spec) {
  return std::exp(-2.0 * x) * f_of_x_scaled(x, spec);
}

std::vector<double> transition_breaks(double m) {
  std::vector<double> b{0.0, 1.0};
  const double xc = 0.5 * std::log(std::max(m, 1.0));
  if (xc > 3.5) {
    b.push_back(xc - 2.0);
    b.push_back(xc);
    b.push_back(xc + 2.0);
  } else {
    b.push_back(4.0);
  }
  b.push_back(quad::inf);
  return b;
}

namespace {

struct ZKey {
  int m;
  double alpha;
  bool operator==(const ZKey&) const = default;
};
struct ZKeyHash {
  std::size_t operator()(const ZKey& k) const {
    const auto bits = std::bit_cast<std::uint64_t>(k.alpha);
    return std::hash<std::uint64_t>{}(bits * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(k.m));
  }
};

Memo<ZKey, quad::QuadResult, ZKeyHash>& z_cache() {
  static Memo<ZKey, quad::QuadResult, ZKeyHash> cache;
  return cache;
}

}  // namespace

quad::QuadResult z_alpha(int m, double alpha) {
  if (m < 1) throw std::domain_error("Z_alpha: m must be >= 1");
  const double beta = WindingPhase::reduce(alpha).alpha;
  return z_cache().get_or_compute(ZKey{m, beta}, [&] {
    if (beta == 0.0) return quad::QuadResult{0.0, 0.0, 1, true};
    quad::QuadSpec x_spec;
    x_spec.rel_tol = 1e-10;
    const auto breaks = transition_breaks(m);
    auto r = quad::integrate_pieces(
        [&](double x) {
          const double w = one_minus_g_alpha(beta, x);
          if (w >= 1.0) return 1.0;
          return -std::expm1(m * std::log1p(-w));
        },
        breaks, x_spec);
    r.value *= pi;
    r.err_est *= pi;
    return r;
  });
}

}  // namespace windsec::analytic
