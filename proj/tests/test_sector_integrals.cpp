#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "windsec/analytic/constants.hpp"
#include "windsec/analytic/sector_integrals.hpp"
#include "windsec/analytic/winding_phase.hpp"
#include "windsec/quad/quadrature.hpp"

using namespace windsec::analytic;
namespace quad = windsec::quad;
using std::numbers::pi;

namespace {

// Phi_{n,j}(U) straight from its definition as an alpha integral.
double phi_direct(int n, int j, double U) {
  quad::QuadSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-15;
  return quad::integrate_1d(
             [&](double a) {
               return std::pow(std::sin(pi * a), j) * std::cosh((a - 0.5) * U) * std::cos(2 * pi * n * a);
             },
             quad::Finite{0.0, 1.0}, spec)
      .value;
}

// I_{n,j} = -pi int_0^1 da cos(2 pi n a) int_0^inf dx (1 - G_a(x))^j.
double inj_alpha_route(int n, int j) {
  quad::QuadSpec spec;
  spec.rel_tol = 1e-8;
  const double breaks[] = {0.0, 1.0, 4.0, quad::inf};
  auto over_x = [&](double a) {
    return quad::integrate_pieces([&](double x) { return std::pow(one_minus_g_alpha(a, x), j); }, breaks, spec)
        .value;
  };
  // Symmetric under a -> 1 - a.
  const auto r = quad::integrate_1d([&](double a) { return over_x(a) * std::cos(2 * pi * n * a); },
                                    quad::Finite{0.0, 0.5}, spec);
  return -2.0 * pi * r.value;
}

}  // namespace

TEST_CASE("closed-form Phi_{n,j} matches its alpha integral") {
  CHECK(phi_nj(1, 1, 0.0) == doctest::Approx(-2.0 / (3.0 * pi)).epsilon(1e-14));
  for (int j = 1; j <= 6; ++j)
    for (int n : {1, 2, 5})
      for (double U : {0.0, 0.3, -2.5, 9.0}) {
        CAPTURE(j);
        CAPTURE(n);
        CAPTURE(U);
        const double d = phi_direct(n, j, U);
        CHECK(std::abs(phi_nj(n, j, U) - d) <= 1e-11 * std::max(1.0, std::cosh(U / 2)));
      }
}

TEST_CASE("reduced Phi is Phi over the cosh product") {
  const std::array<double, 3> u{0.7, -1.9, 3.2};
  for (int n : {1, 3}) {
    const double U = u[0] + u[1] + u[2];
    const double expect = phi_nj(n, 3, U) / (std::cosh(u[0] / 2) * std::cosh(u[1] / 2) * std::cosh(u[2] / 2));
    CHECK(phi_nj_reduced(n, 3, u) == doctest::Approx(expect).epsilon(1e-12));
    const std::array<double, 2> v{u[0], u[1]};
    CHECK(phi_nj_reduced(n, 2, v) ==
          doctest::Approx(phi_nj(n, 2, u[0] + u[1]) / (std::cosh(u[0] / 2) * std::cosh(u[1] / 2))).epsilon(1e-12));
  }
  const std::array<double, 2> big{800.0, -795.0};
  CHECK(std::isfinite(phi_nj_reduced(1, 2, big)));
}

TEST_CASE("I_{n,1} = 1/(2 pi n^2)") {
  for (int n : {1, 2, 5})
    CHECK(std::abs(I_nj(n, 1).value * 2 * pi * n * n - 1.0) <= 1e-8);
}

TEST_CASE("I_{n,j} is even in n") {
  CHECK(I_nj(-3, 2).value == I_nj(3, 2).value);
  CHECK(I_nj(-2, 3).value == I_nj(2, 3).value);
}

TEST_CASE("I_{n,j}: u-space and alpha-space routes agree") {
  for (int n : {1, 2}) {
    CHECK(I_nj(n, 2).value == doctest::Approx(inj_alpha_route(n, 2)).epsilon(1e-6));
    CHECK(I_nj(n, 3).value == doctest::Approx(inj_alpha_route(n, 3)).epsilon(1e-4));
  }
}

TEST_CASE("I_{10,2} approaches its large-n form") {
  const double d2 = model_constants().d2;
  const double asym = 3.0 * d2 / (2 * pi * pi * pi * 1e4);
  CHECK(I_nj(10, 2).value == doctest::Approx(asym).epsilon(0.10));
  CHECK(asym == doctest::Approx(1.37e-5).epsilon(0.01));
}

TEST_CASE("I_{n,j} for j = 4..6 by stratified sampling") {
  for (int j = 4; j <= 6; ++j) {
    const Estimate e = I_nj(1, j);
    CAPTURE(j);
    CHECK(e.method == Method::mc_integration);
    CHECK(e.err > 0.0);
    CHECK(std::abs(e.value - inj_alpha_route(1, j)) <= 4.0 * e.err + 1e-7);
  }
  CHECK_THROWS_AS(I_nj(1, 7), UnsupportedOrder);
  CHECK_THROWS_AS(I_nj(0, 2), std::domain_error);
}

TEST_CASE("one path: <S_n(1)> = 1/(2 pi n^2)") {
  for (int n : {1, -2, 7}) CHECK(mean_Sn(1, n).value == doctest::Approx(1.0 / (2 * pi * n * n)).epsilon(1e-8));
  CHECK_THROWS_AS(mean_Sn(2, 0), std::domain_error);
}

TEST_CASE("the winding sum reproduces Z_{1/2}(1)") {
  // sum_{n != 0} <S_n(1)> (1 - cos(pi n)); tail bound from 1/n^2.
  double s = 0.0;
  const int N = 2001;
  for (int n = 1; n <= N; n += 2) s += 2.0 * 2.0 * mean_Sn(1, n).value;
  const double tail = 2.0 / (pi * (N + 1));
  CHECK(std::abs(s + 0.5 * tail - z_alpha(1, 0.5).value) <= 0.5 * tail + 1e-9);
}

TEST_CASE("binomial and alpha-integral routes for <S_n(m)> agree") {
  for (int m : {2, 3})
    for (int n : {1, 3}) {
      quad::QuadSpec spec;
      spec.rel_tol = 1e-9;
      const auto r = quad::integrate_1d([&](double a) { return z_alpha(m, a).value * std::cos(2 * pi * a * n); },
                                        quad::Finite{0.0, 0.5}, spec);
      CHECK(mean_Sn(m, n).value == doctest::Approx(-2.0 * r.value).epsilon(2e-5));
    }
}

TEST_CASE("<S_n(m)> against its large-n expansion") {
  CHECK(mean_Sn_asymptotic(1, 9) == doctest::Approx(1.0 / (2 * pi * 81)).epsilon(1e-15));
  CHECK(mean_Sn(2, 20).value == doctest::Approx(mean_Sn_asymptotic(2, 20)).epsilon(0.01));
  CHECK(mean_Sn(3, 50).value == doctest::Approx(mean_Sn_asymptotic(3, 50)).epsilon(0.01));
  const double d2 = model_constants().d2;
  const double two_term = 2.0 / (2 * pi * 400) - 3 * d2 / (2 * pi * pi * pi * 160000.0);
  CHECK(mean_Sn(2, 20).value == doctest::Approx(two_term).epsilon(0.05));
}

TEST_CASE("2 pi n^2 <S_n(m)> tends to m") {
  for (int m : {4, 6}) {
    const double r8 = mean_Sn(m, 8).value * 2 * pi * 64;
    const double r16 = mean_Sn(m, 16).value * 2 * pi * 256;
    CHECK(std::abs(r16 - m) < std::abs(r8 - m));
    CHECK(r16 == doctest::Approx(m).epsilon(0.05));
  }
}

TEST_CASE("tuple areas") {
  const std::array<int, 1> one{3};
  CHECK(mean_S_tuple(1, one).value == doctest::Approx(1.0 / (2 * pi * 9)).epsilon(1e-8));

  const std::array<int, 2> pair{10, 10};
  const double c22 = constant_cjm(2, 2).value;
  CHECK(mean_S_tuple(2, pair).value == doctest::Approx(c22 / (4 * pi * pi * pi * 1e4)).epsilon(0.10));

  const std::array<int, 2> swapped{2, -5};
  const std::array<int, 2> swapped2{-5, 2};
  CHECK(mean_S_tuple(3, swapped).value == doctest::Approx(mean_S_tuple(3, swapped2).value).epsilon(1e-12));

  const std::array<int, 4> four{1, 2, 3, 4};
  const Estimate e = mean_S_tuple(4, four);
  CHECK(e.warning);
  CHECK(e.method == Method::asymptotic);

  const std::array<int, 2> bad{1, 0};
  CHECK_THROWS_AS(mean_S_tuple(2, bad), std::domain_error);
}

TEST_CASE("single-winding tuples sum to pi int f (1-f)^{m-1}") {
  const int m = 2;
  double s = 0.0;
  const int N = 200;
  double last = 0.0;
  for (int n = 1; n <= N; ++n) {
    const std::array<int, 1> t{n};
    last = mean_S_tuple(m, t).value;
    s += 2.0 * last;
  }
  // Tail from the 1/n^2 law: sum_{n > N} 1/n^2 ~ 1/(N + 1/2).
  const double tail = 2.0 * last * N * N / (N + 0.5);
  const double breaks[] = {0.0, 1.0, 4.0, quad::inf};
  const auto r = quad::integrate_pieces(
      [](double x) {
        const double f = f_of_x(x);
        return f * (1.0 - f);
      },
      breaks, quad::QuadSpec{});
  CHECK((s + tail) == doctest::Approx(pi * r.value).epsilon(1e-5));
}
