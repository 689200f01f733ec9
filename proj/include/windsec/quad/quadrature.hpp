#pragma once

// Double-exponential quadrature over finite, semi-infinite and infinite
// intervals, plus nested tensor quadrature up to three dimensions.
//
// The 1-d engine is a trapezoid rule in a transformed variable t:
//   finite [a,b]     x = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh t)   (tanh-sinh)
//   [a, +inf)        x = a + exp(pi/2 sinh t)                   (exp-sinh)
//   (-inf, +inf)     x = sinh(pi/2 sinh t)                      (sinh-sinh)
// The step is halved level by level; the difference between successive
// levels is the error estimate. Endpoint singularities of logarithmic or
// algebraic type are absorbed by the transform, the integrand is never
// evaluated on an endpoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace windsec::quad {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_levels = 10;
  int dim_cap = 3;

  // Throws std::invalid_argument when an invariant is broken.
  void validate() const;

  // The tolerance ladder used by this project: 1e-10 (1-d), 1e-7 (2-d),
  // 1e-5 (3-d).
  static QuadSpec for_dimension(int d);
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  long evaluations = 0;
  // false when max_levels was exhausted; value is then the best estimate.
  bool converged = false;
};

struct Finite {
  double a;
  double b;
};
struct SemiInfinite {
  double a;
};
struct Infinite {};

using Domain = std::variant<Finite, SemiInfinite, Infinite>;

// The integrand produced NaN or infinity.
class NonFiniteIntegrand : public std::domain_error {
 public:
  explicit NonFiniteIntegrand(double where)
      : std::domain_error("integrand is not finite at x = " + std::to_string(where)),
        where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

// Requested dimension exceeds QuadSpec::dim_cap.
class UnsupportedDimension : public std::invalid_argument {
 public:
  explicit UnsupportedDimension(int d)
      : std::invalid_argument("nested quadrature dimension " + std::to_string(d) +
                              " exceeds dim_cap; use Monte Carlo integration") {}
};

// An integrand may return a value together with its own absolute error
// (e.g. an inner quadrature); the errors are then integrated alongside the
// values and added to err_est.
struct ValueErr {
  double value;
  double err;
};

namespace detail {

struct Node {
  double x;
  double w;
  bool valid;
};

inline constexpr double half_pi = std::numbers::pi / 2.0;
inline constexpr double t_max = 6.5;
inline constexpr double h0 = 0.5;

inline Node finite_node(double a, double b, double t) {
  const double s = half_pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(s));
  const double d = (b - a) * e / (1.0 + e);
  const double w = (b - a) * 2.0 * e / ((1.0 + e) * (1.0 + e)) * half_pi * std::cosh(t);
  const double x = t > 0 ? b - d : a + d;
  return {x, w, d > 0.0 && x > a && x < b && w > 0.0};
}

inline Node semi_node(double a, double t) {
  const double s = half_pi * std::sinh(t);
  const double e = std::exp(s);
  const double x = a + e;
  const double w = half_pi * std::cosh(t) * e;
  return {x, w, std::isfinite(x) && std::isfinite(w) && x > a};
}

inline Node infinite_node(double t) {
  const double s = half_pi * std::sinh(t);
  const double x = std::sinh(s);
  const double w = half_pi * std::cosh(t) * std::cosh(s);
  return {x, w, std::isfinite(x) && std::isfinite(w)};
}

inline Node node_at(const Domain& d, double t) {
  if (auto p = std::get_if<Finite>(&d)) return finite_node(p->a, p->b, t);
  if (auto p = std::get_if<SemiInfinite>(&d)) return semi_node(p->a, t);
  return infinite_node(t);
}

}  // namespace detail

// Integrates f over the domain. f must be callable as double(double).
template <class F>
QuadResult integrate_1d(F&& f, const Domain& domain, const QuadSpec& spec) {
  spec.validate();
  if (auto p = std::get_if<Finite>(&domain)) {
    if (!(p->a < p->b)) {
      if (p->a == p->b) return {0.0, 0.0, 1, true};
      throw std::invalid_argument("finite domain requires a < b");
    }
  }

  QuadResult r;
  double max_term = 0.0;
  double aux_sum = 0.0;
  auto term_at = [&](double t, bool& valid) {
    const auto node = detail::node_at(domain, t);
    valid = node.valid;
    if (!node.valid) return 0.0;
    double fx;
    if constexpr (std::is_same_v<std::decay_t<decltype(f(node.x))>, ValueErr>) {
      const ValueErr ve = f(node.x);
      fx = ve.value;
      aux_sum += std::abs(ve.err) * node.w;
    } else {
      fx = f(node.x);
    }
    ++r.evaluations;
    if (!std::isfinite(fx)) throw NonFiniteIntegrand(node.x);
    if (fx == 0.0) return 0.0;
    const double term = fx * node.w;
    max_term = std::max(max_term, std::abs(term));
    return term;
  };
  auto negligible = [&](double term) {
    return std::abs(term) <= 1e-18 * max_term;
  };

  // Level 0 also fixes the active t-range in each direction.
  bool valid = true;
  double sum = term_at(0.0, valid);
  std::array<double, 2> t_limit{0.0, 0.0};
  for (int dir = 0; dir < 2; ++dir) {
    const double sign = dir == 0 ? 1.0 : -1.0;
    int quiet = 0;
    for (int i = 1; i * detail::h0 <= detail::t_max; ++i) {
      const double t = sign * i * detail::h0;
      const double term = term_at(t, valid);
      t_limit[dir] = i * detail::h0;
      if (!valid) break;
      sum += term;
      quiet = negligible(term) ? quiet + 1 : 0;
      if (quiet >= 3 && i * detail::h0 >= 1.0) break;
    }
  }

  double h = detail::h0;
  double estimate = sum * h;
  double prev_diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    for (int dir = 0; dir < 2; ++dir) {
      const double sign = dir == 0 ? 1.0 : -1.0;
      for (int i = 1; i * h <= t_limit[dir]; i += 2) {
        const double term = term_at(sign * i * h, valid);
        if (valid) fresh += term;
      }
    }
    sum += fresh;
    const double next = sum * h;
    const double diff = std::abs(next - estimate);
    estimate = next;
    r.value = estimate;
    r.err_est = diff + aux_sum * h;
    if (level >= 2 && diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate))) {
      r.converged = true;
      return r;
    }
    // Rounding floor: differences stopped shrinking at machine precision.
    if (level >= 3 && diff <= 64 * std::numeric_limits<double>::epsilon() * max_term &&
        diff >= prev_diff) {
      r.converged = diff <= std::max(spec.abs_tol, 1e3 * spec.rel_tol * std::abs(estimate));
      return r;
    }
    prev_diff = diff;
  }
  r.value = estimate;
  return r;
}

// Integrates over consecutive pieces [b0,b1], [b1,b2], ...; the last
// breakpoint may be +infinity. Errors add, convergence is the conjunction.
template <class F>
QuadResult integrate_pieces(F&& f, std::span<const double> breaks, const QuadSpec& spec) {
  if (breaks.size() < 2) throw std::invalid_argument("need at least two breakpoints");
  QuadResult total{0.0, 0.0, 0, true};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    QuadResult piece = std::isinf(b) ? integrate_1d(f, SemiInfinite{a}, spec)
                                     : integrate_1d(f, Finite{a, b}, spec);
    total.value += piece.value;
    total.err_est += piece.err_est;
    total.evaluations += piece.evaluations;
    total.converged = total.converged && piece.converged;
  }
  return total;
}

// One axis of a tensor-product integral. An axis declared even over an
// infinite domain is integrated over [0, inf) and doubled.
struct Axis {
  Domain domain = Infinite{};
  bool even = false;
};

// Nested tensor quadrature over d = axes.size() dimensions (d <= dim_cap).
// Every level runs at spec.rel_tol and spec.abs_tol; inner error estimates
// are integrated along with the values. Integrands that change sign need a
// nonzero abs_tol, or inner integrals near zero never meet rel_tol.
template <class F>
QuadResult integrate_nd(F&& f, std::span<const Axis> axes, const QuadSpec& spec) {
  spec.validate();
  const int d = static_cast<int>(axes.size());
  if (d < 1) throw std::invalid_argument("integrate_nd needs at least one axis");
  if (d > spec.dim_cap || d > 3) throw UnsupportedDimension(d);

  const QuadSpec& level_spec = spec;

  std::array<double, 3> point{};
  long evaluations = 0;
  bool all_converged = true;

  auto axis_domain = [&](int k, double& scale) -> Domain {
    scale = 1.0;
    if (axes[k].even && std::holds_alternative<Infinite>(axes[k].domain)) {
      scale = 2.0;
      return SemiInfinite{0.0};
    }
    return axes[k].domain;
  };

  // Recursive lambda over the axis index.
  auto integrate_axis = [&](auto&& self, int k) -> QuadResult {
    double scale = 1.0;
    const Domain dom = axis_domain(k, scale);
    QuadResult r;
    if (k == d - 1) {
      r = integrate_1d(
          [&](double x) {
            point[k] = x;
            ++evaluations;
            return f(std::span<const double>(point.data(), static_cast<std::size_t>(d)));
          },
          dom, level_spec);
    } else {
      r = integrate_1d(
          [&](double x) {
            point[k] = x;
            const QuadResult inner = self(self, k + 1);
            if (!inner.converged) all_converged = false;
            return ValueErr{inner.value, inner.err_est};
          },
          dom, level_spec);
    }
    r.value *= scale;
    r.err_est *= scale;
    return r;
  };

  QuadResult outer = integrate_axis(integrate_axis, 0);
  outer.evaluations = evaluations;
  outer.converged = outer.converged && all_converged;
  return outer;
}

}  // namespace windsec::quad
