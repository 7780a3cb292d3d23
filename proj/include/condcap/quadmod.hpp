#pragma once

#include <complex>
#include <utility>

// Conformal modulus of quadrilaterals with vertices 0, 1, A, B: the
// hypergeometric solver for generic convex data and the collinear-vertex
// solver for "triangles" carrying a marked point A on the side [1,B].

namespace condcap::quadmod {

using cpx = std::complex<double>;

struct QmOptions {
  double bracket_lo = 1e-6;
  double bracket_hi = 1.0 - 1e-13;
};

// Modulus of the quadrilateral (0, 1, A, B), Im A > 0, Im B > 0.
// Angle constraints outside the convex range are tolerated (the reciprocal
// identity produces such data); violations only matter as diagnostics.
double qm(cpx A, cpx B);
double qm(cpx A, cpx B, const QmOptions& opts);

// Modulus when A lies on the segment [1,B] (three collinear vertices).
double qmt(cpx A, cpx B);

// Reflection across Re z = 1/2: (A,B) -> (1 - conj B, 1 - conj A).
std::pair<cpx, cpx> qm_symmetry_pair(cpx A, cpx B);

// True when 1, A, B are collinear (relative tolerance 1e-10) with A strictly
// between 1 and B, i.e. the data belongs to qmt.
bool collinear_marked(cpx A, cpx B);

}  // namespace condcap::quadmod
