#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "condcap/capforms.hpp"
#include "condcap/hypgeom.hpp"
#include "condcap/reference_tables.hpp"
#include "condcap/specfun.hpp"

using namespace condcap;
using namespace condcap::capforms;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cap_disk_by_perimeter") {
  // a disk with the perimeter of the hyperbolic circle of radius R has the
  // capacity of that hyperbolic disk
  for (double R : {0.5, 1.0, 2.0}) {
    const double P = 2.0 * kPi * std::sinh(R);
    CHECK(cap_disk_by_perimeter(P) ==
          doctest::Approx(cap_hyp_disk(R)).epsilon(1e-13));
  }
  SUBCASE("monotone increasing in P") {
    double prev = 0.0;
    for (double P = 0.5; P < 40.0; P *= 1.3) {
      const double v = cap_disk_by_perimeter(P);
      CHECK(v > prev);
      prev = v;
    }
  }
  // half-disk upper bound at t = 1
  CHECK(cap_disk_by_perimeter(kPi * std::sinh(1.0) + 2.0) ==
        doctest::Approx(6.593459117182).epsilon(1e-12));
  CHECK_THROWS_AS(cap_disk_by_perimeter(0.0), std::domain_error);
}

TEST_CASE("cap_hyp_disk and mod_annulus") {
  CHECK(cap_hyp_disk(0.7) ==
        doctest::Approx(mod_annulus(std::tanh(0.35), 1.0)).epsilon(1e-15));
  CHECK(cap_hyp_disk(2.0 * std::atanh(0.2)) ==
        doctest::Approx(3.90396253166234).epsilon(1e-13));
  CHECK(mod_annulus(1.0, std::exp(1.0)) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(mod_annulus(0.4, 1.0) == doctest::Approx(6.85719618087606).epsilon(1e-13));
  CHECK(mod_annulus(0.3, 0.9) == doctest::Approx(mod_annulus(3, 9)).epsilon(1e-15));
  SUBCASE("strictly increasing in R") {
    double prev = 0.0;
    for (double R = 0.2; R < 5.0; R += 0.4) {
      CHECK(cap_hyp_disk(R) > prev);
      prev = cap_hyp_disk(R);
    }
  }
  CHECK_THROWS_AS(mod_annulus(1.0, 0.5), std::domain_error);
}

TEST_CASE("gamma2 and tau2") {
  for (double s : {1.1, 2.0, 10.0})
    CHECK(gamma2(s) == doctest::Approx(2.0 * tau2(s * s - 1.0)).epsilon(1e-12));
  CHECK(gamma2(std::sqrt(2.0)) == doctest::Approx(4.0).epsilon(1e-14));
  SUBCASE("decreasing homeomorphism") {
    double prev = 1e18;
    for (double s = 1.05; s < 50.0; s *= 1.4) {
      CHECK(gamma2(s) < prev);
      prev = gamma2(s);
    }
  }
  CHECK_THROWS_AS(gamma2(1.0), std::domain_error);
  CHECK_THROWS_AS(tau2(0.0), std::domain_error);
}

TEST_CASE("cap_segment") {
  CHECK(cap_segment(0.5) ==
        doctest::Approx(2.0 * kPi / specfun::mu(0.5)).epsilon(1e-15));
  CHECK(cap_segment(1e-9) < 0.31);  // vanishes like 2 pi / log(4/r)
  // equal-perimeter segment bound at t = 1 of the half-disk family
  const double s = (kPi * std::sinh(1.0) + 2.0) / 4.0;
  CHECK(cap_segment(std::tanh(s)) ==
        doctest::Approx(5.387651654447).epsilon(1e-12));
  SUBCASE("segment with hyperbolic perimeter L") {
    // a = th(L/4) inverts the perimeter relation 4 arth a = L
    for (double L : {2.0, 6.0}) {
      const double a = std::tanh(0.25 * L);
      CHECK(4.0 * std::atanh(a) == doctest::Approx(L).epsilon(1e-13));
      CHECK(cap_segment(a) > 0.0);
    }
  }
}

TEST_CASE("cap_symmetric_segments") {
  SUBCASE("witness that the segment bound can beat the star") {
    const int m = 5;
    const double s = 0.5;
    const double t = 2.0 * m * std::log((1.0 + s) / (1.0 - s));
    const double star = cap_symmetric_segments(m, s);
    const double segment = cap_segment(std::tanh(0.25 * t));
    CHECK(star < segment);
  }
  SUBCASE("agrees with the annulus limit along the log asymptote") {
    // for m -> infinity the value behaves as 2 pi/(log(1/s) + log(4)/m);
    // at m = 200 the remaining theta-correction is far below 1e-9
    const int m = 200;
    const double s = 0.5;
    const double asymptote =
        2.0 * kPi * m / (m * std::log(1.0 / s) + std::log(4.0));
    CHECK(cap_symmetric_segments(m, s) ==
          doctest::Approx(asymptote).epsilon(1e-9));
    // and the approach to the annulus value is monotone from below
    const double limit = mod_annulus(s, 1.0);
    const double at20 = cap_symmetric_segments(20, s);
    const double at200 = cap_symmetric_segments(200, s);
    CHECK(std::abs(at200 - limit) < std::abs(at20 - limit));
  }
  SUBCASE("monotone increasing in s") {
    double prev = 0.0;
    for (double s = 0.1; s < 0.95; s += 0.1) {
      CHECK(cap_symmetric_segments(4, s) > prev);
      prev = cap_symmetric_segments(4, s);
    }
  }
  CHECK_THROWS_AS(cap_symmetric_segments(2, 0.5), std::domain_error);
}

TEST_CASE("halfdisk_bounds against references") {
  for (const auto& row : tables::kTable3) {
    const auto b = halfdisk_bounds(row.t);
    REQUIRE(b.lower.size() == 3);
    REQUIRE(b.upper.size() == 1);
    CHECK(std::abs(b.lower[0].value - row.lb_symmetrization) < 1e-9);
    CHECK(std::abs(b.lower[1].value - row.lb_segment) < 1e-9);
    CHECK(std::abs(b.upper[0].value - row.ub_disk) < 1e-9);
  }
  for (const auto& row : tables::kLbNew) {
    CHECK(std::abs(halfdisk_bounds(row.t).lower[2].value - row.lb_split) <
          1e-9);
  }
  SUBCASE("bound ordering on a grid") {
    for (int i = 0; i < 20; ++i) {
      const double t = 0.5 + 2.5 * i / 19.0;
      const auto b = halfdisk_bounds(t);
      CHECK(b.lower[0].value < b.lower[1].value);
      CHECK(b.lower[1].value < b.lower[2].value);
      CHECK(b.lower[2].value < b.upper[0].value);
    }
  }
  SUBCASE("all bounds strictly monotone in t") {
    double p0 = 0, p1 = 0, p2 = 0, p3 = 0;
    for (double t = 0.3; t < 3.5; t += 0.2) {
      const auto b = halfdisk_bounds(t);
      CHECK(b.lower[0].value > p0);
      CHECK(b.lower[1].value > p1);
      CHECK(b.lower[2].value > p2);
      CHECK(b.upper[0].value > p3);
      p0 = b.lower[0].value;
      p1 = b.lower[1].value;
      p2 = b.lower[2].value;
      p3 = b.upper[0].value;
    }
  }
}

TEST_CASE("disk beats segment at equal perimeter") {
  for (double a = 0.05; a < 1.0; a += 0.05) {
    CHECK(cap_disk_by_perimeter(4.0 * std::atanh(a)) > cap_segment(a));
  }
}

TEST_CASE("cap_rect_segment") {
  SUBCASE("reference rows") {
    for (size_t i = 0; i < tables::kTable4.size(); ++i) {
      const auto& row = tables::kTable4[i];
      const auto spec = make_rect_segment(row.a, row.b, row.c, row.d);
      const double v = cap_rect_segment(spec);
      if (static_cast<int>(i) == tables::kTable4DefectiveRow) {
        CHECK(v == doctest::Approx(tables::kTable4Row6CapExact).epsilon(1e-10));
      } else {
        CHECK(v == doctest::Approx(row.cap).epsilon(1e-8));
      }
    }
  }
  SUBCASE("theta-derived modulus feeds the capacity") {
    const double q = std::exp(-kPi * 6.0 / 5.0);
    const auto th = specfun::theta23(q);
    const double k = std::pow(th.theta2 / th.theta3, 2.0);
    CHECK(k > 0.0);
    CHECK(k < 1.0);
    const auto spec = make_rect_segment(5, 6, 2, 5);
    CHECK(cap_rect_segment(spec) ==
          doctest::Approx(4.17125447391152).epsilon(1e-9));
  }
  SUBCASE("mirror symmetry across the horizontal midline") {
    for (const auto& row : {std::array<double, 4>{5, 6, 2, 5},
                            std::array<double, 4>{1, 4, 1, 3}}) {
      const auto s1 = make_rect_segment(row[0], row[1], row[2], row[3]);
      const auto s2 = make_rect_segment(row[0], row[1], row[1] - row[3],
                                        row[1] - row[2]);
      CHECK(cap_rect_segment(s1) ==
            doctest::Approx(cap_rect_segment(s2)).epsilon(1e-9));
    }
  }
  SUBCASE("monotone in the segment endpoints") {
    const auto base = make_rect_segment(5, 6, 2, 5);
    CHECK(cap_rect_segment(make_rect_segment(5, 6, 2, 5.3)) >
          cap_rect_segment(base));
    CHECK(cap_rect_segment(make_rect_segment(5, 6, 1.7, 5)) >
          cap_rect_segment(base));
    CHECK(cap_rect_segment(make_rect_segment(5, 6, 2.3, 5)) <
          cap_rect_segment(base));
  }
  CHECK_THROWS_AS(make_rect_segment(5, 6, 5, 2), std::domain_error);
}

TEST_CASE("et_perimeter") {
  SUBCASE("collapsing tube limit") {
    const double theta = kPi / 4, r = 0.6;
    const double limit = 4.0 * r * (2.0 * kPi - theta) / (1.0 - r * r);
    CHECK(et_perimeter(theta, r, 1e-8) == doctest::Approx(limit).epsilon(1e-6));
  }
  SUBCASE("two-arc sum simplification") {
    const double theta = kPi / 4, r = 0.6, t = 0.1;
    const double u = std::tanh(std::atanh(r) + 0.5 * t);
    const double v = std::tanh(std::atanh(r) - 0.5 * t);
    const double arcs = (2.0 * kPi - theta) *
                        (2.0 * u / (1.0 - u * u) + 2.0 * v / (1.0 - v * v));
    const double closed = (2.0 * kPi - theta) * 4.0 * r * std::cosh(t) /
                          (1.0 - r * r);
    CHECK(arcs == doctest::Approx(closed).epsilon(1e-12));
  }
  SUBCASE("strictly increasing in t") {
    const double theta = kPi / 4, r = 0.6;
    const double tmax = et_tmax(theta, r) / 3.0;
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
      const double t = tmax * i / 10.0;
      CHECK(et_perimeter(theta, r, t) > prev);
      prev = et_perimeter(theta, r, t);
    }
  }
  CHECK_THROWS_AS(et_perimeter(kPi / 4, 0.6, 10.0), std::domain_error);
}

TEST_CASE("lb_continuum") {
  SUBCASE("equality for radial segments") {
    for (double r : {0.2, 0.5, 0.8})
      CHECK(lb_continuum(cpx(0, 0), cpx(r, 0)) ==
            doctest::Approx(cap_segment(r)).epsilon(1e-13));
  }
  SUBCASE("symmetry") {
    const cpx x(0.1, 0.4), y(-0.3, -0.2);
    CHECK(lb_continuum(x, y) == doctest::Approx(lb_continuum(y, x)).epsilon(1e-15));
  }
  SUBCASE("antipodal pair doubles the half-family value") {
    const double s = 0.5;
    const int m = 3;
    const double x = std::pow(s, 0.5 * m);
    CHECK(lb_continuum(cpx(-x, 0), cpx(x, 0)) ==
          doctest::Approx(4.0 * kPi / specfun::mu(std::pow(s, m)))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(lb_continuum(cpx(0.1, 0.1), cpx(0.1, 0.1)), std::domain_error);
}
