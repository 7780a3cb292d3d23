#pragma once

#include <complex>
#include <string>
#include <vector>

// Closed-form capacities and bounds in the unit disk: disks, segments,
// symmetric segment families, the Groetzsch/Teichmueller functions, the
// half-disk bound suite and the rectangle-with-segment condenser.

namespace condcap::capforms {

using cpx = std::complex<double>;

struct LabeledValue {
  std::string label;
  double value;
};

struct CapacityBounds {
  std::vector<LabeledValue> lower;
  std::vector<LabeledValue> upper;
  double reference = 0.0;
  bool has_reference = false;
};

// Rectangle (-a,a)x(0,b) with the vertical segment [ic, id] removed.
struct RectSegmentSpec {
  double a, b, c, d;
};
RectSegmentSpec make_rect_segment(double a, double b, double c, double d);

// cap of a disk in B^2 with hyperbolic perimeter P.
double cap_disk_by_perimeter(double P);

// cap(B^2, closure of B_rho(x,R)) = 2 pi / log(1/th(R/2)).
double cap_hyp_disk(double R);

// cap of the round annulus a < |z| < b (n = 2).
double mod_annulus(double a, double b);

double gamma2(double s);  // Groetzsch capacity, s > 1
double tau2(double s);    // Teichmueller capacity, s > 0

// cap(B^2, [0,r]) = 2 pi / mu(r).
double cap_segment(double r);

// cap(B^2, union of m radial segments of length s): 2 pi m / mu(s^m).
double cap_symmetric_segments(int m, double s);

// Lower/upper bound suite for the half-disk set of hyperbolic radius t.
CapacityBounds halfdisk_bounds(double t);

// Exact capacity of the rectangle-with-segment condenser.
double cap_rect_segment(const RectSegmentSpec& spec);

// Hyperbolic perimeter of the tube neighborhood E(t) of a circular arc.
double et_perimeter(double theta, double r, double t);

// Symmetrization lower bound through two points of a continuum.
double lb_continuum(cpx x, cpx y);

// Admissible range limit for the E(t) construction.
double et_tmax(double theta, double r);

}  // namespace condcap::capforms
