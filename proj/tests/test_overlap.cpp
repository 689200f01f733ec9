#include "doctest.h"

#include <cmath>
#include <numbers>

#include "windsec/analytic/areas.hpp"
#include "windsec/analytic/overlap.hpp"
#include "windsec/analytic/winding_phase.hpp"
#include "windsec/quad/quadrature.hpp"

using namespace windsec::analytic;
namespace quad = windsec::quad;
using std::numbers::pi;

TEST_CASE("two-path overlap ratio") {
  const Estimate r = overlap_ratio();
  CHECK(std::abs(r.value - 0.286) <= 0.003);
  CHECK(circle_overlap_reference() == doctest::Approx(0.297).epsilon(1e-3));
}

TEST_CASE("overlap: u-plane and x-line routes agree") {
  const double breaks[] = {0.0, 1.0, 4.0, quad::inf};
  const auto r = quad::integrate_pieces(
      [](double x) {
        const double f = f_of_x(x);
        return f * f;
      },
      breaks, quad::QuadSpec{});
  CHECK(overlap_two_paths().value == doctest::Approx(pi * 34.0 / 25.0 * r.value).epsilon(1e-6));
}

TEST_CASE("sum of nonzero-winding areas for two paths") {
  CHECK(sum_Sn_2().value == doctest::Approx(sum_Sn(2).value).epsilon(1e-6));
  CHECK(sum_Sn_2().value > pi / 6);
  CHECK(sum_Sn_2().value < pi / 3);
}

TEST_CASE("zero-winding overlap is positive") {
  const Estimate e = s0_overlap_two_paths();
  CHECK(e.value > 0.0);
  CHECK(e.value == doctest::Approx(overlap_two_paths().value + sum_Sn_2().value - pi / 3).epsilon(1e-5));
}
