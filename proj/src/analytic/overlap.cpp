#include "windsec/analytic/overlap.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "windsec/analytic/areas.hpp"
#include "windsec/quad/quadrature.hpp"

namespace windsec::analytic {

namespace {

using std::numbers::pi;

double overlap_weight(double q) { return 2.0 - (1.0 - q) * (1.0 - q); }

double inv_cosh_sum(double u1, double u2) {
  const double d = 2.0 + std::cosh(u1) + std::cosh(u2);
  return std::isinf(d) ? 0.0 : 1.0 / d;
}

double cauchy_pair(double u1, double u2) { return 1.0 / ((pi * pi + u1 * u1) * (pi * pi + u2 * u2)); }

// (tanh(u1/2) + tanh(u2/2)) / ((u1+u2)((2 pi)^2 + (u1+u2)^2)), written as
// sinh(s/2)/(s cosh(u1/2) cosh(u2/2)) so that s = u1+u2 -> 0 and large |u_i|
// are both harmless.
double tanh_pair(double u1, double u2) {
  const double s = u1 + u2;
  const double as = std::abs(s);
  const double sinhc = as == 0.0 ? 1.0 : -std::expm1(-as) / as;
  const double e = std::exp(0.5 * (as - std::abs(u1) - std::abs(u2)));
  const double r = 2.0 * e * sinhc / ((1.0 + std::exp(-std::abs(u1))) * (1.0 + std::exp(-std::abs(u2))));
  return r / (4.0 * pi * pi + s * s);
}

template <class F>
quad::QuadResult plane_integral(F&& f, bool even_each) {
  const std::array<quad::Axis, 2> axes{quad::Axis{quad::Infinite{}, true},
                                       quad::Axis{quad::Infinite{}, even_each}};
  auto spec = quad::QuadSpec::for_dimension(2);
  spec.abs_tol = 1e-13;
  return quad::integrate_nd([&](std::span<const double> u) { return f(u[0], u[1]); }, axes, spec);
}

Estimate scaled(const quad::QuadResult& r, double s, double shift = 0.0) {
  Estimate e{shift + s * r.value, std::abs(s) * r.err_est, Method::quadrature};
  e.warning = !r.converged;
  return e;
}

}  // namespace

Estimate overlap_two_paths(double q) {
  const auto r = plane_integral([](double a, double b) { return inv_cosh_sum(a, b) * cauchy_pair(a, b); }, true);
  return scaled(r, pi * overlap_weight(q));
}

Estimate overlap_ratio(double q) {
  const Estimate o = overlap_two_paths(q);
  const Estimate s = mean_S(1, q);
  Estimate e{o.value / s.value, o.err / s.value + o.value * s.err / (s.value * s.value), Method::quadrature};
  e.warning = o.warning || s.warning;
  return e;
}

double circle_overlap_reference() { return 0.5 - 2.0 / (pi * pi); }

Estimate sum_Sn_2() {
  const auto r = plane_integral([](double a, double b) { return inv_cosh_sum(a, b) * tanh_pair(a, b); }, false);
  return scaled(r, -pi, pi / 3.0);
}

Estimate s0_overlap_two_paths(double q) {
  const double w = overlap_weight(q);
  const auto r = plane_integral(
      [w](double a, double b) { return inv_cosh_sum(a, b) * (w * cauchy_pair(a, b) - tanh_pair(a, b)); }, false);
  Estimate e = scaled(r, pi);

  const Estimate o = overlap_two_paths(q);
  const Estimate s = sum_Sn_2();
  const double via_parts = o.value + s.value - pi / 3.0;
  const double tol = 10.0 * (e.err + o.err + s.err) + 1e-9;
  if (std::abs(via_parts - e.value) > tol)
    throw std::logic_error("zero-winding overlap disagrees with overlap + sum_Sn(2) - pi/3");
  e.err = std::max(e.err, std::abs(via_parts - e.value));
  return e;
}

}  // namespace windsec::analytic
