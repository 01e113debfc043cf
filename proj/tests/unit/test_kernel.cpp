// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "errors.hpp"
#include "kernel.hpp"
#include "specfun.hpp"
#include "support.hpp"

using namespace spherepot;
constexpr double pi = std::numbers::pi;

TEST_SUITE("kernel") {

TEST_CASE("series Green function against frozen high-precision values") {
  CHECK_REL(green_sn(SphereDim(3), 2.0).value, -0.037995443865876664291, 1e-13);
  CHECK_REL(green_sn(SphereDim(4), 1.0).value, 0.013335907208073311959, 1e-13);
  CHECK_REL(green_sn(SphereDim(5), 0.01).value, 12667.505769287085348, 1e-13);
  CHECK_REL(green_sn(SphereDim(3), std::sqrt(2.0)).value, -0.01266514795529222143, 1e-13);
  CHECK_REL(green_quadrature(SphereDim(3), pi / 2), -0.01266514795529222143, 1e-10);
}

TEST_CASE("routes: series below the switch, reflected above") {
  CHECK(green_sn(SphereDim(3), 1.9).route == KernelRoute::series);
  CHECK(green_sn(SphereDim(3), 0.5).route == KernelRoute::reflected_series);
  CHECK(green_sn(SphereDim(3), 0.5).terms_used > 0);
}

TEST_CASE("series agrees with the radial quadrature oracle") {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= 20; ++i) {
      const double t = 0.1 * i;
      const double r = 2.0 * std::asin(t / 2.0);
      worst = std::max(worst, std::abs(green_sn(SphereDim(n), t).value - green_quadrature(SphereDim(n), r)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("S^2 closed form") {
  for (int i = 1; i <= 20; ++i) {
    const double t = 0.1 * i;
    CHECK_ABS(green_sn(SphereDim(2), t).value, green_s2(t), 1e-10);
  }
  CHECK_REL(green_s2(2.0), -1.0 / (4 * pi), 1e-15);
}

TEST_CASE("derivative matches a central difference") {
  for (int n : {2, 3, 5}) {
    const GreenKernel g{SphereDim(n)};
    for (double t : {0.05, 0.7, 1.3, 1.99}) {
      const double h = 1e-5 * t;
      const double fd = (g(t + h) - g(t - h)) / (2 * h);
      CAPTURE(n);
      CAPTURE(t);
      CHECK_REL(g.derivative(t), fd, 1e-7);
      const KernelSlope both = g.eval_with_slope(t);
      CHECK_REL(both.value, g(t), 1e-15);
      CHECK_REL(both.radial_factor, g.radial_factor(t), 1e-15);
    }
  }
}

TEST_CASE("K constants against frozen values") {
  CHECK_REL(kconst(SphereDim(4), 0.5), 0.00079562225523604581074, 1e-12);
  CHECK_REL(kconst(SphereDim(3), 2.5), 0.030382891676168066587, 1e-12);
  CHECK_REL(kconst(SphereDim(5), pi - 0.01), 0.016797136622837626423, 1e-12);
  CHECK(kconst(SphereDim(3), 0.0) == 0.0);
}

TEST_CASE("K on S^2 equals its closed form") {
  for (double a : {0.01, 0.3, 1.0, 2.0, 3.0}) {
    CHECK_ABS(kconst(SphereDim(2), a), kconst_s2_closed_form(a), 1e-12);
  }
}

TEST_CASE("antipodal Green value equals -K(pi)") {
  for (int n = 2; n <= 5; ++n) {
    CHECK_ABS(green_sn(SphereDim(n), 2.0).value + kconst(SphereDim(n), pi), 0.0, 1e-10);
  }
}

// Mean over B(p0, a) of a function of the distance to p0, by radial quadrature.
template <class F>
double radial_mean(int n, double a, F f) {
  using boost::math::quadrature::gauss_kronrod;
  const auto w = [n](double r) { return std::pow(std::sin(r), n - 1); };
  const double num = gauss_kronrod<double, 61>::integrate([&](double r) { return w(r) * f(r); }, 0.0, a, 15, 1e-14);
  const double den = gauss_kronrod<double, 61>::integrate(w, 0.0, a, 15, 1e-14);
  return num / den;
}

TEST_CASE("ball mean at the center equals the radial average") {
  for (int n : {3, 4}) {
    const SphereDim d(n);
    std::vector<double> center(d.ambient(), 0.0);
    center.back() = 1.0;
    for (double a : {0.3, 1.2, 2.5}) {
      const double want = radial_mean(n, a, [&](double r) { return green_sn(d, 2.0 * std::sin(r / 2)).value; });
      CAPTURE(n);
      CAPTURE(a);
      CHECK_REL(ball_mean_green(d, center, BallSpec{center, a}), want, 1e-9);
    }
  }
  const std::vector<double> c2{0, 0, 1};
  for (double a : {0.3, 1.0, 2.0}) {
    const double want = radial_mean(2, a, [](double r) { return std::log(2.0 * std::sin(r / 2)); });
    CHECK_REL(ball_mean_log_s2(c2, BallSpec{c2, a}), want, 1e-10);
  }
}

TEST_CASE("ball mean of the antipode is G(2) + K(a)") {
  const SphereDim d(3);
  const std::vector<double> center{0, 0, 0, 1}, anti{0, 0, 0, -1};
  const double a = 0.8;
  CHECK_REL(ball_mean_green(d, anti, BallSpec{center, a}),
            green_sn(d, 2.0).value + kconst(d, a), 1e-12);
}

TEST_CASE("distances") {
  const std::vector<double> p{1, 0, 0}, q{0, 1, 0}, r{-1, 0, 0};
  CHECK_REL(chordal_distance(p, q), std::sqrt(2.0), 1e-15);
  CHECK_REL(geodesic_distance(p, q), pi / 2, 1e-15);
  CHECK_REL(geodesic_distance(p, r), pi, 1e-15);
  const std::vector<double> tiny{std::cos(1e-9), std::sin(1e-9), 0};
  CHECK_REL(geodesic_distance(p, tiny), 1e-9, 1e-7);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(green_sn(SphereDim(3), 0.0), DomainError);
  CHECK_THROWS_AS(green_sn(SphereDim(3), 2.5), DomainError);
  CHECK_THROWS_AS(kconst(SphereDim(3), 4.0), DomainError);
  CHECK_THROWS_AS(BallSpec({0, 0, 2}, 0.5).validate(SphereDim(2)), DomainError);
}

}  // TEST_SUITE
