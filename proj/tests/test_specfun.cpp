#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "condcap/specfun.hpp"
#include "oracles.hpp"

using namespace condcap::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("hyp2f1 basic values") {
  CHECK(hyp2f1(0.3, 0.7, 1.1, 0.0) == 1.0);
  // F(1,1;2;z) = -log(1-z)/z
  CHECK(hyp2f1(1.0, 1.0, 2.0, 0.5) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-14));
  // F(1/2,1/2;1;z) = (2/pi) K(sqrt z)
  CHECK(hyp2f1(0.5, 0.5, 1.0, 0.25) ==
        doctest::Approx(2.0 / kPi * ell_K(0.5)).epsilon(1e-14));
  // Euler integral oracle on a generic parameter set
  CHECK(hyp2f1(0.4, 0.5, 1.6, 0.3) ==
        doctest::Approx(oracles::hyp2f1_euler(0.4, 0.5, 1.6, 0.3))
            .epsilon(1e-11));
  CHECK(hyp2f1(0.4, 0.5, 1.6, -0.7) ==
        doctest::Approx(oracles::hyp2f1_euler(0.4, 0.5, 1.6, -0.7))
            .epsilon(1e-11));
  // terminating polynomial
  CHECK(hyp2f1(-1.0, 2.0, 3.0, 0.5) ==
        doctest::Approx(1.0 - 2.0 * 0.5 / 3.0).epsilon(1e-14));
}

TEST_CASE("hyp2f1 errors") {
  CHECK_THROWS_AS(hyp2f1(0.3, 0.7, -2.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(hyp2f1(0.3, 0.7, 1.1, 1.0), std::domain_error);
  // large parameters overflow the 200-term budget
  CHECK_THROWS_AS(hyp2f1(80.0, 80.0, 1.0, 0.45), std::runtime_error);
}

TEST_CASE("hyp2f1 branch agreement on the overlap") {
  for (double z : {0.45, 0.48, 0.52, 0.55}) {
    // generic c-a-b
    CHECK(detail::hyp2f1_series(0.3, 0.7, 1.1, z) ==
          doctest::Approx(detail::hyp2f1_via_1mz(0.3, 0.7, 1.1, z))
              .epsilon(1e-12));
    // integer c-a-b = 0 (digamma form)
    CHECK(detail::hyp2f1_series(0.5, 0.5, 1.0, z) ==
          doctest::Approx(detail::hyp2f1_via_1mz(0.5, 0.5, 1.0, z))
              .epsilon(1e-12));
    // integer c-a-b = 1
    CHECK(detail::hyp2f1_series(0.4, 0.6, 2.0, z) ==
          doctest::Approx(detail::hyp2f1_via_1mz(0.4, 0.6, 2.0, z))
              .epsilon(1e-12));
    // negative integer c-a-b = -1 (Euler transformation route)
    CHECK(detail::hyp2f1_series(0.9, 1.2, 1.1, z) ==
          doctest::Approx(detail::hyp2f1_via_1mz(0.9, 1.2, 1.1, z))
              .epsilon(1e-12));
  }
}

TEST_CASE("ell_K") {
  CHECK(ell_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(ell_K(1.0 / std::sqrt(2.0)) ==
        doctest::Approx(1.8540746773013719).epsilon(1e-15));
  // quadrature oracle across the range
  for (double k : {0.1, 0.5, 0.9, 0.99})
    CHECK(ell_K(k) == doctest::Approx(oracles::K_quadrature(k)).epsilon(1e-12));
  CHECK_THROWS_AS(ell_K(1.0), std::domain_error);
  // AGM converges quadratically: six steps reach 1e-15 at k = 0.5
  const double kp = std::sqrt(1.0 - 0.25);
  CHECK(detail::agm_iterations(1.0, kp, 1e-15) <= 6);
}

TEST_CASE("mu values and identities") {
  CHECK(mu(1.0 / std::sqrt(2.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
  const double r = 0.3;
  const double rp = std::sqrt(1.0 - r * r);
  CHECK(mu(r) * mu(rp) == doctest::Approx(kPi * kPi / 4).epsilon(1e-12));
  CHECK(mu(0.2) > std::log(5.0));
  CHECK(mu(0.2) < std::log(20.0));
  CHECK_THROWS_AS(mu(0.0), std::domain_error);
  CHECK_THROWS_AS(mu(1.0), std::domain_error);
  // tiny-argument asymptote stays finite
  CHECK(mu(1e-200) == doctest::Approx(std::log(4e200)).epsilon(1e-14));

  SUBCASE("log(1/r) < mu < log(4/r) on a grid") {
    for (int i = 1; i <= 99; ++i) {
      const double rr = i / 100.0;
      CHECK(mu(rr) > std::log(1.0 / rr));
      CHECK(mu(rr) < std::log(4.0 / rr));
    }
  }
  SUBCASE("inverse round trip") {
    for (double rr : {0.05, 0.3, 0.7, 0.95})
      CHECK(oracles::mu_inverse(mu(rr)) == doctest::Approx(rr).epsilon(1e-12));
  }
  SUBCASE("Landen halving identity") {
    for (int m = 1; m <= 10; ++m) {
      for (double s : {0.2, 0.5, 0.8}) {
        const double sm = std::pow(s, m);
        const double half = 2.0 * std::pow(s, 0.5 * m) / (1.0 + sm);
        CHECK(mu(sm) == doctest::Approx(2.0 * mu(half)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("theta constants") {
  SUBCASE("q -> 0 limits") {
    const auto t = theta23(1e-12);
    CHECK(t.theta3 == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(t.theta2 < 1e-2);
  }
  SUBCASE("direct-summation oracle") {
    for (double q : {0.05, 0.1, 0.3, 0.6}) {
      const auto t = theta23(q);
      CHECK(t.theta2 ==
            doctest::Approx(static_cast<double>(oracles::theta2_direct(q)))
                .epsilon(1e-14));
      CHECK(t.theta3 ==
            doctest::Approx(static_cast<double>(oracles::theta3_direct(q)))
                .epsilon(1e-14));
    }
    // frozen oracle value at q = 0.1
    CHECK(theta23(0.1).theta3 ==
          doctest::Approx(1.2002000020000002).epsilon(1e-15));
  }
  SUBCASE("Jacobi identity theta2^4 + theta4^4 = theta3^4") {
    for (double q : {0.02, 0.1, 0.4, 0.7}) {
      const auto t = theta23(q);
      const double t4 = detail::theta4(q);
      const double lhs = std::pow(t.theta2, 4) + std::pow(t4, 4);
      const double rhs = std::pow(t.theta3, 4);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(theta23(0.0), std::domain_error);
  CHECK_THROWS_AS(theta23(1.0), std::domain_error);
}

TEST_CASE("sn_imag and asn") {
  CHECK(sn_imag(0.0, 0.5) == 0.0);
  SUBCASE("asn endpoints") {
    for (double k : {0.2, 0.6, 0.95}) {
      CHECK(asn(0.0, k) == 0.0);
      CHECK(asn(1.0, k) == doctest::Approx(ell_K(k)).epsilon(1e-13));
    }
  }
  SUBCASE("asn inverts sn on the real axis") {
    const double k = 0.6;
    const double u = 0.4 * ell_K(k);
    CHECK(asn(detail::sn_real(u, k), k) == doctest::Approx(u).epsilon(1e-12));
  }
  SUBCASE("round trip through the imaginary transformation") {
    const double k = 0.7;
    const double kp = std::sqrt(1.0 - k * k);
    for (double y : {0.1, 0.5, 0.9}) {
      const double t = sn_imag(y, k);
      // sn(y;k') = t/sqrt(1+t^2)
      const double w = t / std::sqrt(1.0 + t * t);
      CHECK(asn(w, kp) == doctest::Approx(y).epsilon(1e-12));
    }
  }
  SUBCASE("monotone in y on the principal strip") {
    const double k = 0.4;
    const double kp = std::sqrt(1.0 - k * k);
    const double Kp = ell_K(kp);
    double prev = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double y = 0.95 * Kp * i / 20.0;
      const double t = sn_imag(y, k);
      CHECK(t > prev);
      prev = t;
    }
  }
  CHECK_THROWS_AS(sn_imag(10.0, 0.9), std::domain_error);
  CHECK_THROWS_AS(asn(1.5, 0.5), std::domain_error);
}

TEST_CASE("gamma and beta") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(-2.0), std::domain_error);
  CHECK_THROWS_AS(beta_fn(-1.0, 2.0), std::domain_error);
}

TEST_CASE("digamma") {
  // psi(1) = -gamma, psi(1/2) = -gamma - 2 ln 2
  const double euler = 0.5772156649015329;
  CHECK(detail::digamma(1.0) == doctest::Approx(-euler).epsilon(1e-13));
  CHECK(detail::digamma(0.5) ==
        doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-13));
  // recurrence check
  CHECK(detail::digamma(3.7) - detail::digamma(2.7) ==
        doctest::Approx(1.0 / 2.7).epsilon(1e-12));
}
