#include "windsec/analytic/sector_integrals.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "windsec/analytic/constants.hpp"
#include "windsec/analytic/memo.hpp"
#include "windsec/analytic/winding_phase.hpp"
#include "windsec/quad/quadrature.hpp"
#include "windsec/rng/philox.hpp"

namespace windsec::analytic {

namespace {

using std::numbers::pi;

constexpr int kMaxJ = 6;
constexpr int kMaxQuadJ = 3;
constexpr long kMcSamples = 1L << 21;
constexpr std::uint64_t kMcSeed = 0x5ec7085eedULL;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_nj(int n, int j) {
  if (n == 0) throw std::domain_error("I_{n,j} requires n != 0");
  if (j < 1) throw std::invalid_argument("I_{n,j} requires j >= 1");
  if (j > kMaxJ) throw UnsupportedOrder("I_{n,j}: j > 6 is not supported");
}

// Sum over N of the alternating binomial combination. For odd j = 2k+1 the
// summand is (2N-1)/((pi(2N-1))^2 + U^2); for even j = 2k it is
// h_N(U) = |U| (1 - e^{-|U|}) / (2 ((2 pi N)^2 + U^2)), which is
// U sinh(U/2) e^{-|U|/2} / ((2 pi N)^2 + U^2).
double n_sum(int n, int j, double U) {
  const int k = j / 2;
  const int width = j % 2 == 1 ? 2 * k + 1 : 2 * k;
  const double au = std::abs(U);
  double s = 0.0;
  for (int i = 0; i <= width; ++i) {
    const int N = n - k + i;
    const double c = (i % 2 == 0 ? 1.0 : -1.0) * binom(width, i);
    double term;
    if (j % 2 == 1) {
      const double d = 2.0 * N - 1.0;
      term = d / (pi * pi * d * d + U * U);
    } else if (N == 0) {
      term = au == 0.0 ? 0.5 : -std::expm1(-au) / (2.0 * au);
    } else {
      const double w = 2.0 * pi * N;
      term = au * -std::expm1(-au) / (2.0 * (w * w + U * U));
    }
    s += c * term;
  }
  return s;
}

double prefactor(int j) {
  const int k = j / 2;
  const double sign = j % 2 == 1 ? (k % 2 == 0 ? -1.0 : 1.0) : (k % 2 == 0 ? 1.0 : -1.0);
  return sign / std::ldexp(1.0, j);
}

struct NjKey {
  int n;
  int j;
  bool operator==(const NjKey&) const = default;
};
struct NjKeyHash {
  std::size_t operator()(const NjKey& k) const {
    return std::hash<std::int64_t>{}((static_cast<std::int64_t>(k.n) << 8) ^ k.j);
  }
};

Memo<NjKey, Estimate, NjKeyHash>& inj_cache() {
  static Memo<NjKey, Estimate, NjKeyHash> cache;
  return cache;
}

// Integrand of I_{n,j} without the -pi/(2 pi)^j prefactor.
double inj_integrand(int n, int j, std::span<const double> u) {
  double ch = j;
  for (double v : u) ch += std::cosh(v);
  if (std::isinf(ch)) return 0.0;
  return phi_nj_reduced(n, j, u) / ch;
}

Estimate inj_quadrature(int n, int j) {
  std::vector<quad::Axis> axes(static_cast<std::size_t>(j), quad::Axis{quad::Infinite{}, false});
  axes[0].even = true;  // integrand is invariant under u -> -u
  auto spec = quad::QuadSpec::for_dimension(j);
  // Phi_{n,j} changes sign, so some inner integrals sit near zero.
  spec.abs_tol = j == 2 ? 1e-12 : 1e-10;
  const auto r = quad::integrate_nd([&](std::span<const double> u) { return inj_integrand(n, j, u); },
                                    axes, spec);
  const double scale = -pi / std::pow(2.0 * pi, j);
  Estimate e{scale * r.value, std::abs(scale) * r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

// Stratified sampling on the unit cube, mapped to R^j by the logistic
// quantile u = j ln(p/(1-p)); two points per stratum.
Estimate inj_monte_carlo(int n, int j) {
  long per_axis = 1;
  while (std::pow(static_cast<double>(per_axis + 1), j) * 2 <= static_cast<double>(kMcSamples))
    ++per_axis;
  long strata = 1;
  for (int i = 0; i < j; ++i) strata *= per_axis;
  const double scale_u = j;
  const double vol = 1.0 / static_cast<double>(strata);

  rng::PhiloxStream rng(kMcSeed, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(j), 0u);
  std::array<double, kMaxJ> u{};
  std::array<long, kMaxJ> idx{};
  double total = 0.0;
  double var = 0.0;
  for (long s = 0; s < strata; ++s) {
    long rest = s;
    for (int i = 0; i < j; ++i) {
      idx[i] = rest % per_axis;
      rest /= per_axis;
    }
    std::array<double, 2> y{};
    for (double& yi : y) {
      double weight = 1.0;
      for (int i = 0; i < j; ++i) {
        const double w = rng.uniform01() + 0x1.0p-54;
        const double p = (static_cast<double>(idx[i]) + w) / static_cast<double>(per_axis);
        u[i] = scale_u * std::log(p / (1.0 - p));
        weight *= scale_u / (p * (1.0 - p));
      }
      yi = weight * inj_integrand(n, j, std::span<const double>(u.data(), static_cast<std::size_t>(j)));
    }
    total += vol * 0.5 * (y[0] + y[1]);
    var += vol * vol * 0.25 * (y[0] - y[1]) * (y[0] - y[1]);
  }
  const double scale = -pi / std::pow(2.0 * pi, j);
  return {scale * total, std::abs(scale) * std::sqrt(var), Method::mc_integration};
}

}  // namespace

double phi_nj(int n, int j, double U) {
  check_nj(n, j);
  const double au = std::abs(U);
  if (j % 2 == 1) return prefactor(j) * 2.0 * pi * std::cosh(0.5 * U) * n_sum(n, j, U);
  // n_sum carries e^{-|U|/2}; restore it.
  return prefactor(j) * 2.0 * std::exp(0.5 * au) * n_sum(n, j, U);
}

double phi_nj_reduced(int n, int j, std::span<const double> u) {
  check_nj(n, j);
  if (static_cast<int>(u.size()) != j) throw std::invalid_argument("phi_nj_reduced: need j values");
  double U = 0.0;
  double abs_sum = 0.0;
  double denom = 1.0;
  for (double v : u) {
    U += v;
    abs_sum += std::abs(v);
    denom *= 0.5 * (1.0 + std::exp(-std::abs(v)));  // cosh(v/2) e^{-|v|/2}
  }
  const double au = std::abs(U);
  const double e = std::exp(0.5 * (au - abs_sum)) / denom;
  if (j % 2 == 1) {
    const double ch = 0.5 * (1.0 + std::exp(-au));  // cosh(U/2) e^{-|U|/2}
    return prefactor(j) * 2.0 * pi * ch * e * n_sum(n, j, U);
  }
  return prefactor(j) * 2.0 * e * n_sum(n, j, U);
}

Estimate I_nj(int n, int j) {
  check_nj(n, j);
  const int an = std::abs(n);
  return inj_cache().get_or_compute(NjKey{an, j}, [&] {
    return j <= kMaxQuadJ ? inj_quadrature(an, j) : inj_monte_carlo(an, j);
  });
}

Estimate mean_Sn(int m, int n) {
  if (m < 1) throw std::domain_error("mean_Sn: m must be >= 1");
  if (n == 0)
    throw std::domain_error("mean_Sn: n = 0 has no binomial expansion; use mean_S0 for the zero-winding area");
  if (m <= kMaxQuadJ) {
    Estimate e{0.0, 0.0, Method::quadrature};
    for (int j = 1; j <= m; ++j) {
      const Estimate t = I_nj(n, j);
      const double c = (j % 2 == 1 ? 1.0 : -1.0) * binom(m, j);
      e.value += c * t.value;
      e.err += std::abs(c) * t.err;
      e.warning = e.warning || t.warning;
    }
    return e;
  }
  // -int_0^1 Z_a(m) cos(2 pi a n) da, folded onto [0, 1/2].
  quad::QuadSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-13;
  spec.max_levels = 12;
  const auto r = quad::integrate_1d(
      [&](double a) { return z_alpha(m, a).value * std::cos(2.0 * pi * a * n); },
      quad::Finite{0.0, 0.5}, spec);
  Estimate e{-2.0 * r.value, 2.0 * r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

double mean_Sn_asymptotic(int m, int n) {
  if (n == 0) throw std::domain_error("mean_Sn_asymptotic: n must be nonzero");
  const auto& k = model_constants();
  const double n2 = static_cast<double>(n) * n;
  return m / (2.0 * pi * n2) -
         3.0 / (4.0 * pi * pi * pi * n2 * n2) * (2.0 * binom(m, 2) * k.d2 + binom(m, 3) * k.c3);
}

double p_kernel(double u, int n) {
  const double u2 = u * u;
  const double a = pi * (2.0 * n + 1.0);
  const double b = pi * (2.0 * n - 1.0);
  return (u2 + (1.0 - 4.0 * n * n) * pi * pi) / ((u2 + a * a) * (u2 + b * b));
}

double p_integral(double x, int n) {
  if (!(x >= 0.0)) throw std::domain_error("p_integral: x must be >= 0");
  auto g = [x, n](double u) {
    const double sh = std::sinh(0.5 * u);
    const double e = x == 0.0 ? 1.0 : std::exp(-2.0 * x * sh * sh);
    return e == 0.0 ? 0.0 : e * p_kernel(u, n);
  };
  return 2.0 * std::exp(-2.0 * x) * quad::integrate_1d(g, quad::SemiInfinite{0.0}, inner_spec()).value;
}

Estimate mean_S_tuple(int m, std::span<const int> tuple) {
  const int j = static_cast<int>(tuple.size());
  if (j < 1 || j > m) throw std::invalid_argument("mean_S_tuple: need 1 <= j <= m nonzero windings");
  for (int v : tuple)
    if (v == 0) throw std::domain_error("mean_S_tuple: listed windings must be nonzero");

  if (j > kMaxQuadJ) {
    double prod = 1.0;
    for (int v : tuple) prod *= static_cast<double>(v) * v;
    const Estimate c = constant_cjm(j, m);
    Estimate e{c.value / (std::ldexp(1.0, j) * std::pow(pi, 2 * j - 1) * prod), 0.0, Method::asymptotic};
    e.warning = true;
    e.note = "j > 3: large-n asymptotic form";
    return e;
  }

  quad::QuadSpec spec;
  spec.rel_tol = j == kMaxQuadJ ? 1e-7 : 1e-9;
  const auto breaks = transition_breaks(m);
  const auto r = quad::integrate_pieces(
      [&](double x) {
        double prod = 1.0;
        for (int v : tuple) prod *= p_integral(x, v);
        if (m == j || prod == 0.0) return prod;
        return prod * std::exp((m - j) * std::log1p(-f_of_x(x)));
      },
      breaks, spec);
  const double sign = j % 2 == 1 ? -1.0 : 1.0;
  Estimate e{sign * pi * r.value, pi * r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

}  // namespace windsec::analytic
