#include "doctest.h"

#include <cmath>

#include "windsec/analytic/constants.hpp"

using namespace windsec::analytic;

TEST_CASE("c_1 = int e^{-x} K_0 = 1") { CHECK(constant_cj(1).value == doctest::Approx(1.0).epsilon(1e-9)); }

TEST_CASE("d_2 and c_3") {
  const double d2 = constant_dj(2).value;
  const double c3 = constant_cj(3).value;
  CHECK(d2 >= 2.83);
  CHECK(d2 <= 2.85);
  CHECK(c3 >= 5.72);
  CHECK(c3 <= 5.74);
  CHECK(model_constants().d2 == d2);
  CHECK(model_constants().c3 == c3);
  CHECK(model_constants().q == 0.2);
}

TEST_CASE("c_{2,2}: series and quadrature agree") {
  const Estimate s = c22_series();
  const Estimate q = constant_cjm(2, 2);
  CHECK(s.method == Method::series);
  CHECK(std::abs(s.value - q.value) <= 1e-6);
  CHECK(constant_cjm(2, 2).value == constant_cj(2).value);
}

TEST_CASE("c_{j,m} decreases in m") {
  CHECK(constant_cjm(1, 2).value < constant_cj(1).value);
  CHECK(constant_cjm(1, 3).value < constant_cjm(1, 2).value);
  CHECK_THROWS_AS(constant_cjm(3, 2), std::invalid_argument);
}
