#include "condcap/capforms.hpp"

#include <cmath>
#include <stdexcept>

#include "condcap/hypgeom.hpp"
#include "condcap/specfun.hpp"

namespace condcap::capforms {

namespace {
constexpr double kPi = 3.14159265358979323846;
using specfun::ell_K;
using specfun::mu;
using specfun::sn_imag;
using specfun::theta23;
}  // namespace

RectSegmentSpec make_rect_segment(double a, double b, double c, double d) {
  if (!(a > 0.0 && 0.0 < c && c < d && d < b))
    throw std::domain_error("rect_segment: need a > 0 and 0 < c < d < b");
  return RectSegmentSpec{a, b, c, d};
}

double cap_disk_by_perimeter(double P) {
  if (!(P > 0.0)) throw std::domain_error("cap_disk_by_perimeter: P must be > 0");
  return 2.0 * kPi /
         std::log((2.0 * kPi + std::sqrt(P * P + 4.0 * kPi * kPi)) / P);
}

double cap_hyp_disk(double R) {
  if (!(R > 0.0)) throw std::domain_error("cap_hyp_disk: R must be > 0");
  return 2.0 * kPi / std::log(1.0 / std::tanh(0.5 * R));
}

double mod_annulus(double a, double b) {
  if (!(0.0 < a && a < b)) throw std::domain_error("mod_annulus: need 0 < a < b");
  return 2.0 * kPi / std::log(b / a);
}

double gamma2(double s) {
  if (!(s > 1.0)) throw std::domain_error("gamma2: requires s > 1");
  return 2.0 * kPi / mu(1.0 / s);
}

double tau2(double s) {
  if (!(s > 0.0)) throw std::domain_error("tau2: requires s > 0");
  return 0.5 * gamma2(std::sqrt(s + 1.0));
}

double cap_segment(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("cap_segment: requires r in (0,1)");
  return 2.0 * kPi / mu(r);
}

double cap_symmetric_segments(int m, double s) {
  if (m < 3) throw std::domain_error("cap_symmetric_segments: requires m >= 3");
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("cap_symmetric_segments: requires s in (0,1)");
  return 2.0 * kPi * m / mu(std::pow(s, m));
}

CapacityBounds halfdisk_bounds(double t) {
  if (!(t > 0.0)) throw std::domain_error("halfdisk_bounds: t must be > 0");
  const double P = kPi * std::sinh(t) + 2.0 * t;
  CapacityBounds out;
  out.lower.push_back({"symmetrization", 2.0 * kPi / mu(std::tanh(t))});
  out.lower.push_back({"equal-perimeter-segment", 2.0 * kPi / mu(std::tanh(0.25 * P))});
  out.lower.push_back({"half-plane-split",
                       kPi / std::log(1.0 / std::tanh(0.5 * t)) + kPi / mu(std::tanh(t))});
  out.upper.push_back({"equal-perimeter-disk", cap_disk_by_perimeter(P)});
  // ordering is asserted, never silently sorted
  for (const auto& lo : out.lower)
    for (const auto& hi : out.upper)
      if (!(lo.value <= hi.value))
        throw std::logic_error("halfdisk_bounds: lower bound '" + lo.label +
                               "' exceeds upper bound '" + hi.label + "'");
  return out;
}

namespace {

// elliptic modulus from a nome, with the small-q asymptote below the theta
// truncation floor
double modulus_from_nome(double q) {
  if (q < 1e-12) return 4.0 * std::sqrt(q);
  const auto th = theta23(q);
  const double ratio = th.theta2 / th.theta3;
  return ratio * ratio;
}

}  // namespace

double cap_rect_segment(const RectSegmentSpec& spec) {
  const double a = spec.a, b = spec.b, c = spec.c, d = spec.d;
  if (!(a > 0.0 && 0.0 < c && c < d && d < b))
    throw std::domain_error("cap_rect_segment: need a > 0 and 0 < c < d < b");
  // k and k' each from their own nome, so both stay fully accurate even for
  // extreme aspect ratios
  const double k = modulus_from_nome(std::exp(-kPi * b / a));
  const double kp = modulus_from_nome(std::exp(-kPi * a / b));
  const double K = kPi / (2.0 * specfun::detail::agm(1.0, kp));
  const double Kp = kPi / (2.0 * specfun::detail::agm(1.0, k));
  const double alpha = a / K;
  if (!(d / alpha < Kp))
    throw std::domain_error("cap_rect_segment: segment tip outside the sn strip");
  // sn(iy;k) = i sn(y;k')/cn(y;k')
  const double chat = specfun::detail::sc_real_pair(c / alpha, kp, k);
  const double dhat = specfun::detail::sc_real_pair(d / alpha, kp, k);
  return 2.0 * kPi / mu((dhat - chat) / (dhat + chat));
}

double et_tmax(double theta, double r) {
  return 2.0 * std::asinh(2.0 * r * std::sin(0.5 * theta) / (1.0 - r * r));
}

double et_perimeter(double theta, double r, double t) {
  if (!(theta > 0.0 && theta < 0.5 * kPi))
    throw std::domain_error("et_perimeter: theta must lie in (0, pi/2)");
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("et_perimeter: r must lie in (0,1)");
  if (!(t > 0.0 && 3.0 * t <= et_tmax(theta, r)))
    throw std::domain_error("et_perimeter: t violates 0 < 3t <= rho(r, r e^{i theta})");
  return 2.0 * kPi * std::sinh(t) +
         4.0 * r * (2.0 * kPi - theta) * std::cosh(t) / (1.0 - r * r);
}

double lb_continuum(cpx x, cpx y) {
  if (std::abs(x - y) == 0.0)
    throw std::domain_error("lb_continuum: points must be distinct");
  const double rho = hypgeom::rho_disk(x, y);
  return gamma2(1.0 / std::tanh(0.5 * rho));
}

}  // namespace condcap::capforms
