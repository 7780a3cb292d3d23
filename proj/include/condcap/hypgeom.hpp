#pragma once

#include <complex>
#include <functional>
#include <vector>

// Hyperbolic geometry of the unit disk: the distance, hyperbolic disks as
// Euclidean disks, geodesic arcs and perimeter quadrature for closed
// boundary curves.

namespace condcap {

using cpx = std::complex<double>;

namespace hypgeom {

struct EuclideanDisk {
  cpx center;
  double radius;
};

// One smooth parametrized piece, t in [0,1].
struct CurveSegment {
  std::function<cpx(double)> point;
  std::function<cpx(double)> tangent;  // d point / d t
};

// Closed 2pi-periodic boundary curve sampled at the uniform nodes
// s_k = (k-1) 2pi/n, together with the underlying evaluators so the
// corner-aware quadrature can refine between nodes.
struct BoundaryCurve {
  int n = 0;  // even node count
  std::vector<cpx> positions;
  std::vector<cpx> derivatives;  // d xi / d s at the nodes
  bool ccw = true;
  std::vector<double> corners;  // corner parameters in [0,2pi), sorted
  std::function<cpx(double)> eval;
  std::function<cpx(double)> deriv;

  bool has_corners() const { return !corners.empty(); }
};

// Poincare distance in the unit disk.
double rho_disk(cpx x, cpx y);

// Euclidean center/radius of the hyperbolic disk B_rho(x, M).
EuclideanDisk hyp_disk_to_euclidean(cpx x, double M);

double circle_perimeter_hyp(double R);  // 2 pi sh R
double disk_area_hyp(double R);         // 4 pi sh^2(R/2)

// Hyperbolic length of the full closed curve.  Smooth curves use the
// trapezoidal rule over the stored nodes (spectrally accurate); curves with
// corners are split there and integrated with Gauss-Legendre per piece.
double perimeter_trapezoid(const BoundaryCurve& curve);

// Derivative of the trigonometric interpolant at the nodes (Nyquist zeroed).
std::vector<cpx> spectral_derivative(const std::vector<cpx>& samples);

// Sum of hyperbolic side lengths of the closed chain v_0..v_{m-1}, v_m=v_0.
double polygon_hyp_perimeter(const std::vector<cpx>& vertices);

// Geodesic between two interior points: circular arc orthogonal to the unit
// circle, or the straight chord when v, w are on a diameter.
CurveSegment geodesic_arc(cpx v, cpx w);

std::vector<cpx> sample_segment(const CurveSegment& seg, int samples);

// Hyperbolic length of one open segment (64-point Gauss-Legendre).
double hyp_length(const CurveSegment& seg);

// Assemble a closed curve from smooth evaluators (no corners).
BoundaryCurve make_smooth_curve(std::function<cpx(double)> f,
                                std::function<cpx(double)> df, int n,
                                bool ccw = true);

// Assemble a closed curve from consecutive pieces; joints become corners.
// Piece i occupies s in [2pi i/m, 2pi (i+1)/m].
BoundaryCurve make_piecewise_curve(std::vector<CurveSegment> pieces, int n,
                                   bool ccw = true);

// Closed polygonal boundary through the given vertices.
BoundaryCurve polygon_curve(const std::vector<cpx>& vertices, int n = 0);

// Degenerate segment [0,a] traversed out and back, corners at the tips.
BoundaryCurve segment_curve(double a, int n = 64);

}  // namespace hypgeom
}  // namespace condcap
