#include "condcap/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "condcap/numutil.hpp"

namespace condcap::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_nonpositive_integer(double x, double tol = 1e-12) {
  return x <= 0.5 && std::abs(x - std::round(x)) < tol;
}

int gamma_sign(double x) {
  if (x > 0.0) return 1;
  const long long f = static_cast<long long>(std::floor(x));
  return (f % 2 == 0) ? 1 : -1;
}

// Gamma(n1)Gamma(n2) / (Gamma(d1)Gamma(d2)) with correct signs for negative
// non-integer arguments.
double signed_gamma_ratio(double n1, double n2, double d1, double d2) {
  const double mag = std::exp(std::lgamma(n1) + std::lgamma(n2) -
                              std::lgamma(d1) - std::lgamma(d2));
  return mag * gamma_sign(n1) * gamma_sign(n2) * gamma_sign(d1) *
         gamma_sign(d2);
}

}  // namespace

EllipticModulus make_modulus(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("make_modulus: k must lie in (0,1)");
  return EllipticModulus{k, std::sqrt((1.0 - k) * (1.0 + k))};
}

namespace detail {

double agm(double a, double b) {
  for (int it = 0; it < 80; ++it) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) <= 2e-16 * a) break;
  }
  return 0.5 * (a + b);
}

int agm_iterations(double a, double b, double tol) {
  int it = 0;
  while (std::abs(a - b) > tol * a && it < 80) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    ++it;
  }
  return it;
}

double digamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("digamma: pole at nonpositive integer");
  double result = 0.0;
  if (x < 0.0) {
    result -= kPi / std::tan(kPi * x);
    x = 1.0 - x;
  }
  while (x < 12.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv;
  result -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
            inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return result;
}

double hyp2f1_series(double a, double b, double c, double z) {
  if (near_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 200; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1: series failed to converge in 200 terms");
}

namespace {

// z -> 1-z connection formula in terms of w = 1-z, valid away from integer
// c-a-b (A&S 15.3.6).
double hyp2f1_connection_w(double a, double b, double c, double w) {
  const double d = c - a - b;
  const double f1 = signed_gamma_ratio(c, d, c - a, c - b) *
                    hyp2f1_series(a, b, a + b - c + 1.0, w);
  const double f2 = signed_gamma_ratio(c, -d, a, b) * std::pow(w, d) *
                    hyp2f1_series(c - a, c - b, d + 1.0, w);
  return f1 + f2;
}

// Digamma form for c = a+b+m with integer m >= 0, in terms of w = 1-z
// (A&S 15.3.10 / 15.3.11).
double hyp2f1_log_case_w(double a, double b, int m, double w) {
  const double c = a + b + m;
  const double logw = std::log(w);
  double finite = 0.0;
  if (m >= 1) {
    double term = 1.0;
    double acc = term;
    for (int k = 1; k < m; ++k) {
      term *= (a + k - 1.0) * (b + k - 1.0) / (k * (k - m)) * w;
      acc += term;
    }
    finite = acc * signed_gamma_ratio(static_cast<double>(m), c, a + m, b + m);
  }
  double sum = 0.0;
  double coef = 1.0;  // (a+m)_k (b+m)_k / (k! (k+m)!) w^k, scaled by m!
  for (int k = 0; k < 500; ++k) {
    if (k > 0)
      coef *= (a + m + k - 1.0) * (b + m + k - 1.0) / (k * (k + m)) * w;
    const double bracket = logw - digamma(k + 1.0) - digamma(k + m + 1.0) +
                           digamma(a + m + k) + digamma(b + m + k);
    sum += coef * bracket;
    if (k > 2 && std::abs(coef) * (std::abs(logw) + 20.0) <=
                     1e-16 * std::abs(sum))
      break;
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double front = sign * std::pow(w, m) *
                       signed_gamma_ratio(c, 1.0, a, b) /
                       std::tgamma(m + 1.0);
  return finite - front * sum;
}

double hyp2f1_from_w(double a, double b, double c, double w) {
  const double d = c - a - b;
  const double n = std::round(d);
  if (std::abs(d - n) <= 1e-8) {
    const int m = static_cast<int>(n);
    if (m < 0) {
      // Euler transformation flips the sign of c-a-b.
      return std::pow(w, d) * hyp2f1_from_w(c - a, c - b, c, w);
    }
    return hyp2f1_log_case_w(a, b, m, w);
  }
  if (std::abs(d - n) < 1e-7) {
    // near-integer band: nudge c both ways and average
    const double eps = 1e-5;
    return 0.5 * (hyp2f1_connection_w(a, b, c + eps, w) +
                  hyp2f1_connection_w(a, b, c - eps, w));
  }
  return hyp2f1_connection_w(a, b, c, w);
}

}  // namespace

double hyp2f1_via_1mz(double a, double b, double c, double z) {
  return hyp2f1_from_w(a, b, c, 1.0 - z);
}

}  // namespace detail

double hyp2f1_near_one(double a, double b, double c, double w) {
  if (near_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  if (!(w > 0.0 && w <= 0.5))
    throw std::domain_error("hyp2f1_near_one: requires w in (0, 1/2]");
  return detail::hyp2f1_from_w(a, b, c, w);
}

std::complex<double> hyp2f1_above_cut_near_one(double a, double b, double c,
                                               double sigma) {
  if (!(sigma > 0.0 && sigma <= 0.5))
    throw std::domain_error("hyp2f1_above_cut_near_one: sigma in (0, 1/2]");
  const double d = c - a - b;
  if (std::abs(d - std::round(d)) < 1e-10)
    throw std::domain_error(
        "hyp2f1_above_cut_near_one: integer c-a-b unsupported");
  // connection formula at w = 1-z = -sigma - i0, so arg(w) = -pi
  const double f1 = detail::hyp2f1_series(a, b, a + b - c + 1.0, -sigma);
  const double f2 = detail::hyp2f1_series(c - a, c - b, d + 1.0, -sigma);
  const std::complex<double> wpow =
      std::pow(sigma, d) * std::exp(std::complex<double>(0.0, -kPi * d));
  return signed_gamma_ratio(c, d, c - a, c - b) * f1 +
         wpow * signed_gamma_ratio(c, -d, a, b) * f2;
}

double hyp2f1(double a, double b, double c, double z) {
  if (near_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  if (!(z < 1.0)) throw std::domain_error("hyp2f1: requires z < 1");
  if (z == 0.0) return 1.0;
  if (near_nonpositive_integer(a) || near_nonpositive_integer(b)) {
    // terminating polynomial, valid for every z
    const bool on_a = near_nonpositive_integer(a);
    const double aa = on_a ? std::round(a) : a;
    const double bb = on_a ? b : std::round(b);
    const int nterms = static_cast<int>(-(on_a ? aa : bb));
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < nterms; ++k) {
      term *= (aa + k) * (bb + k) / ((c + k) * (k + 1.0)) * z;
      sum += term;
    }
    return sum;
  }
  if (z < 0.0) {
    // Pfaff transformation maps z < 0 into (0,1)
    return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
  }
  if (z <= 0.5) return detail::hyp2f1_series(a, b, c, z);
  return detail::hyp2f1_via_1mz(a, b, c, z);
}

std::complex<double> hyp2f1_above_cut(double a, double b, double c, double x) {
  if (!(x > 1.0)) throw std::domain_error("hyp2f1_above_cut: requires x > 1");
  if (near_nonpositive_integer(c))
    throw std::domain_error("hyp2f1_above_cut: c is a nonpositive integer");
  const double diff = b - a;
  if (std::abs(diff - std::round(diff)) < 1e-7) {
    const double eps = 1e-5;
    return 0.5 * (hyp2f1_above_cut(a + eps, b, c, x) +
                  hyp2f1_above_cut(a - eps, b, c, x));
  }
  using cd = std::complex<double>;
  // (-z)^(-a) with z = x + i0: arg(-z) -> -pi from below.
  const cd phase_a = std::exp(cd(0.0, kPi * a));
  const cd phase_b = std::exp(cd(0.0, kPi * b));
  const double inv = 1.0 / x;
  const double f1 = hyp2f1(a, a - c + 1.0, a - b + 1.0, inv);
  const double f2 = hyp2f1(b, b - c + 1.0, b - a + 1.0, inv);
  const cd t1 = signed_gamma_ratio(c, b - a, b, c - a) * std::pow(x, -a) *
                phase_a * f1;
  const cd t2 = signed_gamma_ratio(c, a - b, a, c - b) * std::pow(x, -b) *
                phase_b * f2;
  return t1 + t2;
}

double ell_K(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw std::domain_error("ell_K: requires 0 <= k < 1");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  return kPi / (2.0 * detail::agm(1.0, kp));
}

namespace {

// (pi/2) AGM(1,r')/AGM(1,r), stable over the whole of (0,1).
double mu_agm(double r) {
  const double rp = std::sqrt((1.0 - r) * (1.0 + r));
  return kPi / 2.0 * detail::agm(1.0, rp) / detail::agm(1.0, r);
}

}  // namespace

double mu(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("mu: requires r in (0,1)");
  if (r < 1e-150) return std::log(4.0 / r);
  if (r > 1.0 - 1e-10) {
    // mu(r) mu(r') = pi^2/4 with r' far from 1
    const double rp = std::sqrt((1.0 - r) * (1.0 + r));
    return kPi * kPi / 4.0 / mu_agm(rp);
  }
  return mu_agm(r);
}

ThetaPair theta23(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("theta23: nome must lie in (0,1)");
  const double lq = std::log(q);
  double t2 = 0.0;
  for (int n = 0;; ++n) {
    const double term = std::exp((n + 0.5) * (n + 0.5) * lq);
    t2 += term;
    if (term < 1e-16) break;
  }
  double t3 = 0.0;
  for (int n = 1;; ++n) {
    const double term = std::exp(static_cast<double>(n) * n * lq);
    t3 += term;
    if (term < 1e-16) break;
  }
  return ThetaPair{q, 2.0 * t2, 1.0 + 2.0 * t3};
}

namespace detail {

double theta4(double q) {
  const double lq = std::log(q);
  double sum = 0.0, sign = -1.0;
  for (int n = 1;; ++n) {
    const double term = sign * std::exp(static_cast<double>(n) * n * lq);
    sum += term;
    if (std::abs(term) < 1e-16) break;
    sign = -sign;
  }
  return 1.0 + 2.0 * sum;
}

double sn_real_pair(double u, double k, double kp) {
  if (k < 1e-10) return std::sin(u);
  // descending Landen step on the modulus pair
  const double k1 = (1.0 - kp) / (1.0 + kp);
  const double k1p = 2.0 * std::sqrt(kp) / (1.0 + kp);
  const double s = sn_real_pair(u / (1.0 + k1), k1, k1p);
  return (1.0 + k1) * s / (1.0 + k1 * s * s);
}

double cn_real_pair(double u, double k, double kp) {
  const double s = sn_real_pair(u, k, kp);
  const double c2 = (1.0 - s) * (1.0 + s);
  return c2 > 0.0 ? std::sqrt(c2) : 0.0;
}

double sc_real_pair(double u, double k, double kp) {
  const double K = kPi / (2.0 * agm(1.0, kp));
  if (std::abs(u) < 0.7 * K)
    return sn_real_pair(u, k, kp) / cn_real_pair(u, k, kp);
  // near the quarter period use sn(K-w) = cd(w), cn(K-w) = k' sd(w)
  const double sign = u >= 0 ? 1.0 : -1.0;
  const double w = K - std::abs(u);
  if (w <= 0.0) throw std::domain_error("sc_real: argument at or beyond K(k)");
  return sign * cn_real_pair(w, k, kp) / (kp * sn_real_pair(w, k, kp));
}

double sn_real(double u, double k) {
  return sn_real_pair(u, k, std::sqrt((1.0 - k) * (1.0 + k)));
}

double cn_real(double u, double k) {
  return cn_real_pair(u, k, std::sqrt((1.0 - k) * (1.0 + k)));
}

double sc_real(double u, double k) {
  return sc_real_pair(u, k, std::sqrt((1.0 - k) * (1.0 + k)));
}

}  // namespace detail

double sn_imag(double y, double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("sn_imag: k must lie in (0,1)");
  if (y == 0.0) return 0.0;
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double Kp = kPi / (2.0 * detail::agm(1.0, k));
  if (!(std::abs(y) < Kp))
    throw std::domain_error("sn_imag: |y| must be below K(k') (pole)");
  // sn(iy;k) = i sn(y;k')/cn(y;k')
  return detail::sc_real_pair(y, kp, k);
}

double asn(double w, double k) {
  if (!(w >= 0.0 && w <= 1.0))
    throw std::domain_error("asn: requires w in [0,1]");
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("asn: k must lie in (0,1)");
  if (w == 0.0) return 0.0;
  // t = sin(theta) removes the 1/sqrt(1-t^2) endpoint singularity
  const double phi = std::asin(w);
  const double k2 = k * k;
  auto f = [k2](double th) {
    const double s = std::sin(th);
    return 1.0 / std::sqrt(1.0 - k2 * s * s);
  };
  return num::adaptive_simpson(f, 0.0, phi, 1e-14);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at nonpositive integer");
  // Lanczos, g = 7, 9 coefficients
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  x -= 1.0;
  double acc = coef[0];
  for (int i = 1; i < 9; ++i) acc += coef[i] / (x + i);
  const double t = x + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("beta_fn: requires positive arguments");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace condcap::specfun
