#pragma once

// Mean arithmetic areas enclosed by m independent closed paths of unit
// time, their decomposition by the number of paths winding nonzero, and
// the large-m expansions.

#include "windsec/analytic/constants.hpp"
#include "windsec/analytic/types.hpp"

namespace windsec::analytic {

// Phi_q(m) = pi int_0^inf dx (1 - (1 - (1-q) f(x))^m), 0 <= q < 1.
Estimate phi_q(int m, double q = kDefaultQ);

// A_k(m) = C(m,k) pi int_0^inf dx f^k (1-f)^{m-k}, 1 <= k <= m.
Estimate A_k(int m, int k);

// <S(m)> = 2 Phi_0(m) - Phi_q(m).
Estimate mean_S(int m, double q = kDefaultQ);

// <S_{0,...,0}(m)> = Phi_0(m) - Phi_q(m).
Estimate mean_S00(int m, double q = kDefaultQ);

// sum over n != 0 of <S_n(m)> = int_0^1 Z_a(m) da.
Estimate sum_Sn(int m);

// <S_0(m)> = <S(m)> - sum_{n != 0} <S_n(m)>.
Estimate mean_S0(int m, double q = kDefaultQ);

// Large-m forms, m >= 2.
double mean_S_asymptotic(int m);
double mean_S_minus_S0_asymptotic(int m);

// lim_{m -> inf} <S_0(m)> = (pi/2) ln(5/pi).
double s0_limit();

// (pi/2) ln m - (pi/4) ln ln m + (pi/2)(ln(1-q) + ln sqrt(4/pi^3) + C), m >= 3.
double phi_q_asymptotic(int m, double q = kDefaultQ);

}  // namespace windsec::analytic
