#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "condcap/capforms.hpp"

// Lower bounds for ring condensers by quadrilateral decomposition: the ring
// between two m-gons splits into m quadrilaterals whose reciprocal moduli
// sum to a capacity lower bound, with equality for regular rings.

namespace condcap::ringbound {

using cpx = std::complex<double>;

// Closed vertex chains; outer[j-1] -> outer[j] faces inner[j-1] -> inner[j],
// both listed counterclockwise without the repeated closing vertex.
struct PolygonalRing {
  std::vector<cpx> outer;
  std::vector<cpx> inner;
  // true when the inner chain is a degenerate slit traversal (repeated
  // coordinates are prime ends, not geometric duplicates)
  bool degenerate_inner = false;
};

// Affine normalization z -> (z - p0)/(p1 - p0); returns images of (p2, p3).
std::pair<cpx, cpx> normalize_quadrilateral(cpx p0, cpx p1, cpx p2, cpx p3);

// Checks the ring invariants: matching chain lengths, pairwise disjoint
// quadrilateral interiors, inner chain inside the outer. Throws on failure.
void validate_ring(const PolygonalRing& ring);

// Modulus of the quadrilateral (p0, p1, p2, p3) after normalization,
// dispatching to the collinear solver when three vertices line up.
double quad_modulus(cpx p0, cpx p1, cpx p2, cpx p3);

// Sum over j of 1/M(Q_j).
double ring_lower_bound(const PolygonalRing& ring);

// Per-quadrilateral reciprocal moduli (diagnostics / tests).
std::vector<double> ring_quad_contributions(const PolygonalRing& ring);

// Capacity of the ring between the regular m-gon inscribed in the unit
// circle and its copy scaled by lambda: m / M(Q_1) with closed-form Q_1.
double cap_regular_ring(int m, double lambda);

// The m = 6 decomposition of the rectangle-with-segment ring. Split points
// on the slit sit at heights c + (d-c)/3 and c + 2(d-c)/3.
PolygonalRing rect_segment_ring(const capforms::RectSegmentSpec& spec);

// Lower bound for the rectangle-with-segment condenser using the left/right
// mirror symmetry (three distinct moduli).
double rect_segment_lower_bound(const capforms::RectSegmentSpec& spec);

}  // namespace condcap::ringbound
