#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "icp/geometry.hpp"

using namespace icp;
using std::numbers::pi;

TEST_CASE("conformal coordinate roundtrip") {
  for (double r : {0.01, 0.5, 1.0, 3.0, 20.0}) {
    CHECK(radius_from_u(Background::Euclidean,
                        u_from_radius(Background::Euclidean, r)) ==
          doctest::Approx(r).epsilon(1e-14));
    CHECK(radius_from_u(Background::Hyperbolic,
                        u_from_radius(Background::Hyperbolic, r)) ==
          doctest::Approx(r).epsilon(1e-12));
    CHECK(u_from_radius(Background::Hyperbolic, r) < 0.0);
  }
}

TEST_CASE("euclidean two-circle configuration, frozen values") {
  // ri=1, rj=2, weight pi/3
  CHECK(edge_length(Background::Euclidean, 1, 2, pi / 3) ==
        doctest::Approx(2.6457513110645906).epsilon(1e-15));
  CHECK(half_angle(Background::Euclidean, 1, 2, pi / 3) ==
        doctest::Approx(0.7137243789447656).epsilon(1e-15));
}

TEST_CASE("euclidean equal radii give exactly half the weight") {
  for (double t : {0.3, 1.0, 2.9})
    for (double r : {0.25, 1.0, 7.5})
      CHECK(half_angle(Background::Euclidean, r, r, t) == 0.5 * t);
}

TEST_CASE("hyperbolic two-circle configuration, frozen values") {
  CHECK(edge_length(Background::Hyperbolic, 1, 2, pi / 3) ==
        doctest::Approx(2.7606288199639016).epsilon(1e-14));
  CHECK(half_angle(Background::Hyperbolic, 1, 2, pi / 3) ==
        doctest::Approx(0.41035961872447274).epsilon(1e-13));
  CHECK(edge_length(Background::Hyperbolic, 0.01, 0.01, pi / 2) ==
        doctest::Approx(0.014142253472798771).epsilon(1e-13));
  CHECK(half_angle(Background::Hyperbolic, 0.01, 0.01, pi / 2) ==
        doctest::Approx(0.7853731638141143).epsilon(1e-13));
  CHECK(edge_length(Background::Hyperbolic, 0.001, 5, 2 * pi / 3) ==
        doctest::Approx(4.99950037515907).epsilon(1e-13));
  CHECK(half_angle(Background::Hyperbolic, 0.001, 5, 2 * pi / 3) ==
        doctest::Approx(2.0935287818381013).epsilon(1e-13));
  CHECK(edge_length(Background::Hyperbolic, 2, 2, pi / 2) ==
        doctest::Approx(3.3419024481892764).epsilon(1e-14));
  CHECK(half_angle(Background::Hyperbolic, 2, 2, pi / 2) ==
        doctest::Approx(0.25979517042931036).epsilon(1e-13));
}

TEST_CASE("hyperbolic half angle stays accurate for large radii") {
  // equal radii 50, weight 2pi/3: angle around 6.7e-22
  CHECK(half_angle(Background::Hyperbolic, 50, 50, 2 * pi / 3) ==
        doctest::Approx(6.681385463528506e-22).epsilon(1e-10));
  // log-space regime: radii 200 and 300
  CHECK(half_angle(Background::Hyperbolic, 200, 300, 2 * pi / 3) ==
        doctest::Approx(4.793958193452261e-87).epsilon(1e-9));
  CHECK(edge_length(Background::Hyperbolic, 200, 300, 2 * pi / 3) ==
        doctest::Approx(500.0 - 1.3862943611198906).epsilon(1e-14));
}

TEST_CASE("half angles of one edge sum below the weight's supplement") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rr(0.05, 4.0), tt(0.1, pi - 0.1);
  for (int k = 0; k < 500; ++k) {
    const double ri = rr(rng), rj = rr(rng), th = tt(rng);
    for (Background bg : {Background::Euclidean, Background::Hyperbolic}) {
      const double ai = half_angle(bg, ri, rj, th);
      const double aj = half_angle(bg, rj, ri, th);
      CHECK(ai > 0.0);
      CHECK(ai < th);
      // triangle angle sum: the apex angle pi - th leaves at most th
      CHECK(ai + aj <= th + 1e-12);
      if (bg == Background::Euclidean)
        CHECK(ai + aj == doctest::Approx(th).epsilon(1e-12));
    }
  }
}

TEST_CASE("half angle derivatives match finite differences") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> rr(0.1, 3.0), tt(0.2, pi - 0.2);
  for (int k = 0; k < 200; ++k) {
    const double ri = rr(rng), rj = rr(rng), th = tt(rng);
    for (Background bg : {Background::Euclidean, Background::Hyperbolic}) {
      const double ui = u_from_radius(bg, ri), uj = u_from_radius(bg, rj);
      const double h = 1e-6;
      const auto d = d_half_angle_d_u(bg, ri, rj, th);
      const double fdi = (half_angle(bg, radius_from_u(bg, ui + h), rj, th) -
                          half_angle(bg, radius_from_u(bg, ui - h), rj, th)) /
                         (2 * h);
      const double fdj = (half_angle(bg, ri, radius_from_u(bg, uj + h), th) -
                          half_angle(bg, ri, radius_from_u(bg, uj - h), th)) /
                         (2 * h);
      CHECK(d.first == doctest::Approx(fdi).epsilon(2e-5));
      CHECK(d.second == doctest::Approx(fdj).epsilon(2e-5));
      CHECK(d.first <= 0.0);
      CHECK(d.second >= 0.0);
    }
  }
}

TEST_CASE("equal radius closed form agrees with the generic path") {
  for (double t : {0.05, 0.3, 1.0, 3.0, 10.0})
    for (double th : {0.3, pi / 2, 2 * pi / 3, 3.0})
      CHECK(equal_radius_half_angle_hyperbolic(t, th) ==
            doctest::Approx(half_angle(Background::Hyperbolic, t, t, th))
                .epsilon(1e-11));
}

TEST_CASE("uniform smallness radius") {
  const double th = 2 * pi / 3;
  for (double eps : {1e-2, 1e-4, 1e-8}) {
    const double L = theta_upper_bound_radius(eps, th);
    CHECK(L > 0.0);
    // at the bound the supremum hits eps; beyond it every angle is smaller
    CHECK(half_angle_sup(L, th) == doctest::Approx(eps).epsilon(1e-6));
    CHECK(half_angle(Background::Hyperbolic, L + 0.1, 100.0, th) < eps);
    CHECK(half_angle(Background::Hyperbolic, L + 0.1, 0.05, th) < eps);
  }
  CHECK(theta_upper_bound_radius(th + 0.1, th) == 0.0);
}

TEST_CASE("half angle supremum dominates and is monotone") {
  const double th = pi / 2;
  double prev = th;
  for (double r : {0.05, 0.3, 1.0, 2.0, 5.0}) {
    const double s = half_angle_sup(r, th);
    CHECK(s < prev);
    prev = s;
    for (double rj : {0.1, 1.0, 10.0, 100.0})
      CHECK(half_angle(Background::Hyperbolic, r, rj, th) < s + 1e-12);
  }
  CHECK(half_angle_sup(1e-8, th) == doctest::Approx(th).epsilon(1e-6));
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS(edge_length(Background::Euclidean, -1.0, 1.0, 1.0));
  CHECK_THROWS(edge_length(Background::Euclidean, 1.0, 1.0, 0.0));
  CHECK_THROWS(edge_length(Background::Euclidean, 1.0, 1.0, pi));
  CHECK_THROWS(half_angle(Background::Hyperbolic, 0.0, 1.0, 1.0));
}
