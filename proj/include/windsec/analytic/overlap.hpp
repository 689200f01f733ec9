#pragma once

// Two-path overlap quantities.

#include "windsec/analytic/constants.hpp"
#include "windsec/analytic/types.hpp"

namespace windsec::analytic {

// <2S(1) - S(2)> = pi (2 - (1-q)^2) int_0^inf f(x)^2 dx, evaluated as a
// double u-integral.
Estimate overlap_two_paths(double q = kDefaultQ);

// overlap_two_paths() / <S(1)>.
Estimate overlap_ratio(double q = kDefaultQ);

// Overlap of two circles of radius R through a common point, in units of
// pi R^2: 1/2 - 2/pi^2.
double circle_overlap_reference();

// sum over n != 0 of <S_n(2)> as pi/3 minus a double u-integral.
Estimate sum_Sn_2();

// <2 S_0(1) - S_0(2)>; checked against overlap + sum_Sn_2 - pi/3.
Estimate s0_overlap_two_paths(double q = kDefaultQ);

}  // namespace windsec::analytic
