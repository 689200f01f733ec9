#pragma once

// Modified Bessel functions over the parameter ranges used in this project.

#include "windsec/quad/quadrature.hpp"

namespace windsec::quad {

// K_alpha(x) from the integral representation
//   K_alpha(x) = 1/2 * int_{-inf}^{inf} exp(-x cosh u) cosh(alpha u) du,
// |alpha| <= 1, x > 0. Symmetric in alpha.
double bessel_k(double alpha, double x, const QuadSpec& spec = {});

// exp(x) * K_alpha(x); finite for large x where K_alpha underflows.
double bessel_k_scaled(double alpha, double x, const QuadSpec& spec = {});

// I_nu(x) by its power series, nu >= 0 and 0 <= x <= 50. Meant as an
// independent oracle, not for production paths.
double bessel_i(double nu, double x);

}  // namespace windsec::quad
