#pragma once

#include <functional>
#include <span>
#include <vector>

// Scalar solvers and quadrature helpers shared by the higher-level modules.

namespace condcap::num {

// Bracketed root finding (Brent). Requires f(a)*f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-14, int max_iter = 200);

// Scalar minimization on [a,b] (Brent: golden section + parabolic steps).
// Returns the abscissa of the minimum.
double brent_minimize(const std::function<double(double)>& f, double a,
                      double b, double xtol = 1e-12, int max_iter = 500);

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double xtol = 1e-14, int max_iter = 200);

// Adaptive Simpson on [a,b], absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13);

// Gauss-Legendre nodes/weights on [-1,1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
double gauss_integrate(const std::function<double(double)>& f, double a,
                       double b, int n = 64);

}  // namespace condcap::num
