#pragma once

// Areas of the n-winding sectors: the integrals I_{n,j}, the per-n mean
// areas <S_n(m)>, and the mean areas of sectors labelled by per-path
// winding tuples.

#include <span>

#include "windsec/analytic/types.hpp"

namespace windsec::analytic {

// Phi_{n,j}(U) = int_0^1 sin^j(pi a) cosh((a - 1/2) U) cos(2 pi n a) da in
// closed form, U the sum of the u_i.
double phi_nj(int n, int j, double U);

// Phi_{n,j}(u_1 + ... + u_j) / prod cosh(u_i / 2), evaluated without
// overflow for large |u_i|.
double phi_nj_reduced(int n, int j, std::span<const double> u);

// I_{n,j} = -pi int_0^1 da cos(2 pi n a) int_0^inf dx (1 - G_a(x))^j.
// j <= 3 by nested quadrature, 4 <= j <= 6 by stratified Monte Carlo
// (method mc_integration, err is one standard error).
Estimate I_nj(int n, int j);

// <S_n(m)>, n != 0.
Estimate mean_Sn(int m, int n);

// m/(2 pi n^2) - 3/(4 pi^3 n^4) (2 C(m,2) d_2 + C(m,3) c_3).
double mean_Sn_asymptotic(int m, int n);

// P(u, n), the kernel of int_0^1 da (1 - G_a(x)) cos(2 pi n a) in u-space.
double p_kernel(double u, int n);

// p_n(x) = int du exp(-x(1+cosh u)) P(u, n).
double p_integral(double x, int n);

// Mean area of the sector with windings (n_1, ..., n_j, 0, ..., 0) for m
// paths; all listed n_i nonzero. j <= 3 by quadrature, larger j returns the
// large-n asymptotic form with warning set.
Estimate mean_S_tuple(int m, std::span<const int> tuple);

}  // namespace windsec::analytic
