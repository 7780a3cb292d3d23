#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "condcap/capforms.hpp"
#include "condcap/geomgen.hpp"
#include "condcap/hypgeom.hpp"

using namespace condcap;
using namespace condcap::geomgen;

namespace {
constexpr double kPi = 3.14159265358979323846;

double polygon_boundary_hyp_length(const std::vector<cpx>& v) {
  return hypgeom::perimeter_trapezoid(hypgeom::polygon_curve(v));
}
}  // namespace

TEST_CASE("SeededRng determinism and splitting") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  auto s1 = SeededRng(42).split(3), s2 = SeededRng(42).split(3);
  CHECK(s1.uniform() == s2.uniform());
  auto s3 = SeededRng(42).split(4);
  CHECK(s1.uniform() != s3.uniform());
}

TEST_CASE("gen_convex_polygon") {
  SeededRng rng(42);
  const auto poly = gen_convex_polygon(rng);
  REQUIRE(poly.m >= 3);
  REQUIRE(poly.m <= 12);
  SUBCASE("determinism under a fixed seed") {
    SeededRng rng2(42);
    const auto again = gen_convex_polygon(rng2);
    REQUIRE(again.m == poly.m);
    for (int i = 0; i < poly.m; ++i)
      CHECK(std::abs(again.vertices[i] - poly.vertices[i]) == 0.0);
  }
  SUBCASE("vertices on the common circle, angles increasing") {
    double prev = -10.0;
    for (const cpx& v : poly.vertices) {
      CHECK(std::abs(v) == doctest::Approx(poly.s).epsilon(1e-14));
      double ang = std::arg(v);
      if (ang < prev - kPi) ang += 2 * kPi;  // unwrap across the cut
      CHECK(ang > prev);
      prev = ang;
    }
  }
  SUBCASE("convexity across many seeds") {
    for (int seed = 0; seed < 50; ++seed) {
      SeededRng r = SeededRng(7).split(seed);
      const auto p = gen_convex_polygon(r);
      const size_t m = p.vertices.size();
      for (size_t i = 0; i < m; ++i) {
        const cpx o = p.vertices[i], u = p.vertices[(i + 1) % m],
                  w = p.vertices[(i + 2) % m];
        const double cr = (u.real() - o.real()) * (w.imag() - o.imag()) -
                          (u.imag() - o.imag()) * (w.real() - o.real());
        CHECK(cr > 0.0);
      }
    }
  }
}

TEST_CASE("gen_hyperbolic_polygon") {
  SeededRng rng(11);
  std::vector<cpx> vertices;
  const auto curve = gen_hyperbolic_polygon(rng, &vertices);
  REQUIRE(vertices.size() >= 3);
  SUBCASE("vertices lie on the curve") {
    const int m = static_cast<int>(vertices.size());
    for (int i = 0; i < m; ++i) {
      const double s = 2 * kPi * i / m;
      CHECK(std::abs(curve.eval(s) - vertices[i]) < 1e-12);
    }
  }
  SUBCASE("geodesic sides never beat straight sides in hyperbolic length") {
    const double geodesic = hypgeom::polygon_hyp_perimeter(vertices);
    const double straight = polygon_boundary_hyp_length(vertices);
    CHECK(geodesic <= straight + 1e-10);
  }
}

TEST_CASE("gen_nonconvex_polygon") {
  SUBCASE("reflex vertex exists and the polygon is simple") {
    for (int seed = 0; seed < 30; ++seed) {
      SeededRng rng = SeededRng(5).split(seed);
      const auto poly = gen_nonconvex_polygon(rng);
      const size_t m = poly.vertices.size();
      bool reflex = false;
      for (size_t i = 0; i < m; ++i) {
        const cpx o = poly.vertices[i], u = poly.vertices[(i + 1) % m],
                  w = poly.vertices[(i + 2) % m];
        if ((u.real() - o.real()) * (w.imag() - o.imag()) -
                (u.imag() - o.imag()) * (w.real() - o.real()) <
            0.0)
          reflex = true;
      }
      CHECK(reflex);
    }
  }
  SUBCASE("star-shaped about the origin") {
    SeededRng rng(99);
    const auto poly = gen_nonconvex_polygon(rng);
    const size_t m = poly.vertices.size();
    // ray from 0 through each boundary sample crosses the boundary once
    for (int k = 0; k < 64; ++k) {
      const double phi = 2 * kPi * k / 64.0;
      const cpx dir = std::exp(cpx(0, phi));
      int crossings = 0;
      for (size_t i = 0; i < m; ++i) {
        const cpx a = poly.vertices[i], b = poly.vertices[(i + 1) % m];
        // intersect segment [a,b] with the ray t*dir, t > 0
        const double det = dir.real() * (a.imag() - b.imag()) -
                           dir.imag() * (a.real() - b.real());
        if (std::abs(det) < 1e-15) continue;
        const double t = (a.real() * (a.imag() - b.imag()) -
                          a.imag() * (a.real() - b.real())) /
                         det;
        const double s = (dir.real() * a.imag() - dir.imag() * a.real()) / det;
        if (t > 0.0 && s >= 0.0 && s < 1.0) ++crossings;
      }
      CHECK(crossings == 1);
    }
  }
  SUBCASE("determinism") {
    SeededRng r1(123), r2(123);
    const auto p1 = gen_nonconvex_polygon(r1);
    const auto p2 = gen_nonconvex_polygon(r2);
    REQUIRE(p1.m == p2.m);
    for (int i = 0; i < p1.m; ++i)
      CHECK(std::abs(p1.vertices[i] - p2.vertices[i]) == 0.0);
  }
}

TEST_CASE("build_Et") {
  const double theta = kPi / 4;
  SUBCASE("perimeter quadrature matches the closed form") {
    for (double r : {0.5, 0.6}) {
      const double t = capforms::et_tmax(theta, r) / 4.0;
      const auto curve = build_Et(theta, r, t);
      CHECK(hypgeom::perimeter_trapezoid(curve) ==
            doctest::Approx(capforms::et_perimeter(theta, r, t)).epsilon(1e-6));
    }
  }
  SUBCASE("radial ordering v < r < u") {
    const double r = 0.6, t = 0.2;
    const double u = std::tanh(std::atanh(r) + 0.5 * t);
    const double v = std::tanh(std::atanh(r) - 0.5 * t);
    CHECK(v < r);
    CHECK(r < u);
    const auto curve = build_Et(theta, r, t);
    // the outer arc sits at |z| = u, the inner at |z| = v
    CHECK(std::abs(curve.eval(kPi)) == doctest::Approx(u).epsilon(1e-12));
    CHECK(std::abs(curve.eval(1.9 * kPi)) == doctest::Approx(v).epsilon(1e-12));
  }
  SUBCASE("boundary is simple") {
    for (double r : {0.5, 0.75}) {
      const double t = capforms::et_tmax(theta, r) / 3.5;
      const auto curve = build_Et(theta, r, t, 1024);
      const auto& p = curve.positions;
      const int n = curve.n;
      int crossings = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
          if (i == 0 && j == n - 1) continue;
          const cpx a = p[i], b = p[(i + 1) % n], c = p[j], d = p[(j + 1) % n];
          auto cr = [](cpx o, cpx x, cpx y) {
            return (x.real() - o.real()) * (y.imag() - o.imag()) -
                   (x.imag() - o.imag()) * (y.real() - o.real());
          };
          if (((cr(a, b, c) > 0) != (cr(a, b, d) > 0)) &&
              ((cr(c, d, a) > 0) != (cr(c, d, b) > 0)))
            ++crossings;
        }
      }
      CHECK(crossings == 0);
    }
  }
  CHECK_THROWS_AS(build_Et(theta, 0.5, 10.0), std::domain_error);
}

TEST_CASE("build_halfdisk") {
  SUBCASE("containment at t = 2 for both centers") {
    CHECK_NOTHROW(build_halfdisk(0.5, 2.0));
    CHECK_NOTHROW(build_halfdisk(0.75, 2.0));
  }
  SUBCASE("diameter edge lies on the real axis") {
    const auto cond = build_halfdisk(0.5, 1.0);
    REQUIRE(cond.inner_loops.size() == 1);
    int on_axis = 0;
    for (const cpx& z : cond.inner_loops[0]) {
      if (z.imag() == 0.0) ++on_axis;
      CHECK(z.imag() > -1e-15);
    }
    CHECK(on_axis > 100);
  }
  SUBCASE("perimeter equals pi sh t + 2t") {
    for (double t : {0.5, 1.0, 2.0}) {
      const auto curve = halfdisk_boundary(0.5, t);
      CHECK(hypgeom::perimeter_trapezoid(curve) ==
            doctest::Approx(kPi * std::sinh(t) + 2.0 * t).epsilon(1e-10));
    }
  }
  // hyperbolic disks always stay inside the unit disk; only a radius beyond
  // double range collapses the containment margin to zero
  CHECK_THROWS_AS(build_halfdisk(0.9, 40.0), std::domain_error);
}

TEST_CASE("gen_trapezium_ring") {
  SUBCASE("radial ranges") {
    SeededRng rng(1234);
    const auto ring = gen_trapezium_ring(6, rng);
    for (const cpx& a : ring.outer) {
      CHECK(std::abs(a) >= 2.5);
      CHECK(std::abs(a) <= 3.0);
    }
    for (const cpx& b : ring.inner) {
      CHECK(std::abs(b) >= 1.0);
      CHECK(std::abs(b) <= 1.5);
    }
  }
  SUBCASE("invariants hold for 100 seeds") {
    for (int seed = 0; seed < 100; ++seed) {
      SeededRng rng = SeededRng(77).split(seed);
      const int m = 3 + seed % 8;
      CHECK_NOTHROW(gen_trapezium_ring(m, rng));
    }
  }
  SUBCASE("determinism") {
    SeededRng r1(5), r2(5);
    const auto a = gen_trapezium_ring(5, r1);
    const auto b = gen_trapezium_ring(5, r2);
    for (size_t i = 0; i < a.outer.size(); ++i) {
      CHECK(std::abs(a.outer[i] - b.outer[i]) == 0.0);
      CHECK(std::abs(a.inner[i] - b.inner[i]) == 0.0);
    }
  }
  SUBCASE("m = 2 rejected") {
    SeededRng tiny(1);
    CHECK_THROWS_AS(gen_trapezium_ring(2, tiny), std::domain_error);
  }
}
