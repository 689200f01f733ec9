#pragma once

// Winding characteristic function of a closed Brownian path of unit time,
//   G_alpha(x) = <exp(i alpha theta)>,  x = r^2 / t,
// and the derived single-path kernels. Everything here is a pure function.

#include "windsec/analytic/types.hpp"
#include "windsec/quad/quadrature.hpp"

namespace windsec::analytic {

// Inner u-integrals run at this tolerance unless a caller passes its own.
quad::QuadSpec inner_spec();

// 1 - G_alpha(x) from
//   (sin(alpha pi)/pi) int du exp(-x(1+cosh u)) cosh((alpha-1/2)u) / (2 cosh(u/2)).
// Accurate in relative terms, including where it is exponentially small.
double one_minus_g_alpha(double alpha, double x, const quad::QuadSpec& spec = inner_spec());

// G_alpha(x) in [0, 1]; G_0 = 1, and G_alpha(0) = 0 for non-integer alpha.
double g_alpha(double alpha, double x, const quad::QuadSpec& spec = inner_spec());

// dG/dx = sin(alpha pi)/pi exp(-x) (K_alpha(x) + K_{1-alpha}(x)), x > 0.
double dg_alpha_dx(double alpha, double x);

// f(x) = int_0^1 (1 - G_alpha(x)) d alpha = int du exp(-x(1+cosh u))/(u^2+pi^2).
double f_of_x(double x, const quad::QuadSpec& spec = inner_spec());

// exp(2x) f(x); decays only like x^{-1/2}.
double f_of_x_scaled(double x, const quad::QuadSpec& spec = inner_spec());

// Z_alpha(m) = pi int_0^inf (1 - G_alpha(x)^m) dx. Results are memoised on
// (m, alpha) because the alpha quadratures revisit the same nodes.
quad::QuadResult z_alpha(int m, double alpha);

// Breakpoints for x-integrals of 1 - (1 - z(x))^m with z ~ exp(-2x): the
// integrand steps from 1 to 0 around x = ln(m)/2.
std::vector<double> transition_breaks(double m);

}  // namespace windsec::analytic
