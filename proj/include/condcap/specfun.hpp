#pragma once

#include <complex>

// Real/complex special functions used throughout: the Gauss hypergeometric
// function, complete elliptic integrals, the ring modulus function mu, theta
// constants and the Jacobi elliptic sine on the real and imaginary axes.

namespace condcap::specfun {

struct EllipticModulus {
  double k;        // in (0,1)
  double k_prime;  // sqrt(1-k^2)
};
EllipticModulus make_modulus(double k);

struct ThetaPair {
  double q;       // nome, in (0,1)
  double theta2;  // 2 sum q^((n+1/2)^2)
  double theta3;  // 1 + 2 sum q^(n^2)
};

// Gauss hypergeometric F(a,b;c;z) for real z < 1.  The defining series is
// used for z <= 1/2; for z in (1/2,1) the z -> 1-z connection formula is
// applied, switching to the digamma (log) form when c-a-b is an integer.
double hyp2f1(double a, double b, double c, double z);

// F(a,b;c;x + i0) for real x > 1, i.e. the limit onto the branch cut from
// the upper half-plane, via the z -> 1/z connection formula.
std::complex<double> hyp2f1_above_cut(double a, double b, double c, double x);

// F(a,b;c;1-w) with the complement w in (0, 1/2] supplied exactly, so that
// arguments exponentially close to 1 keep full precision.
double hyp2f1_near_one(double a, double b, double c, double w);

// F(a,b;c;1+sigma + i0) for sigma in (0, 1/2], again with the offset from 1
// supplied exactly. Requires non-integer c-a-b.
std::complex<double> hyp2f1_above_cut_near_one(double a, double b, double c,
                                               double sigma);

// Complete elliptic integral of the first kind, K(k) = pi/(2 AGM(1,k')).
double ell_K(double k);

// mu(r) = (pi/2) K(r')/K(r), the module of the Groetzsch ring.
double mu(double r);

// theta constants at the given nome.
ThetaPair theta23(double q);

// t such that sn(i y; k) = i t, for real y with |y| < K(k').
double sn_imag(double y, double k);

// Inverse of the elliptic sine: sn^{-1}(w;k) for w in [0,1].
double asn(double w, double k);

double gamma_fn(double x);
double beta_fn(double x, double y);

namespace detail {
double agm(double a, double b);
int agm_iterations(double a, double b, double tol);  // steps to converge
double digamma(double x);
double sn_real(double u, double k);
double cn_real(double u, double k);
double sc_real(double u, double k);  // sn/cn, stable near u = K(k)
// pair variants carry the complementary modulus exactly through the Landen
// descent, for moduli within a few ulps of 1
double sn_real_pair(double u, double k, double kp);
double cn_real_pair(double u, double k, double kp);
double sc_real_pair(double u, double k, double kp);
double theta4(double q);
// Individual 2F1 evaluation routes, exposed for cross-checking.
double hyp2f1_series(double a, double b, double c, double z);
double hyp2f1_via_1mz(double a, double b, double c, double z);
}  // namespace detail

}  // namespace condcap::specfun
