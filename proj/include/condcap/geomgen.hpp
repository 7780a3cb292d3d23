#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "condcap/capsolve.hpp"
#include "condcap/hypgeom.hpp"
#include "condcap/ringbound.hpp"

// Deterministic generators for the condenser families used by the sweeps:
// convex/hyperbolic/nonconvex polygons, trapezium rings, arc tubes E(t) and
// half-disks.

namespace condcap::geomgen {

using cpx = std::complex<double>;

// Counter-based generator: the stream depends only on (seed, counter), so
// identical seeds replay identical draws on every platform, and sub-streams
// split off cheaply.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed) {}
  double uniform();                       // in (0,1)
  int uniform_int(int lo, int hi);        // inclusive range
  SeededRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct PolygonSample {
  std::vector<cpx> vertices;
  int m = 0;
  double s = 0.0;  // common radius (convex family)
};

// Convex family: m in {3..12}, vertices s e^{i theta_j} with jittered
// equispaced angles; redraws (capped) until the polygon is convex.
PolygonSample gen_convex_polygon(SeededRng& rng);

// Same vertices, sides replaced by hyperbolic geodesic arcs.
hypgeom::BoundaryCurve gen_hyperbolic_polygon(SeededRng& rng,
                                              std::vector<cpx>* vertices_out = nullptr);

// Nonconvex family: alternating radii, redrawn until simple with at least
// one reflex angle.
PolygonSample gen_nonconvex_polygon(SeededRng& rng);

// Tube neighborhood of the circular arc {r e^{is}: theta <= s <= 2 pi}.
hypgeom::BoundaryCurve build_Et(double theta, double r, double t, int n = 512);

// Upper half of the hyperbolic disk B_rho(x,t) as a condenser in the disk.
capsolve::Condenser build_halfdisk(double x, double t);
// Its boundary curve (semicircle + diameter), for perimeter checks.
hypgeom::BoundaryCurve halfdisk_boundary(double x, double t, int n = 256);

// Random trapezium ring of Subsection-style radii (outer 2.5..3, inner
// 1..1.5), redrawn until the ring invariants hold.
ringbound::PolygonalRing gen_trapezium_ring(int m, SeededRng& rng);

// Condenser wrappers for the grid oracle.
capsolve::Condenser polygon_condenser(const std::vector<cpx>& vertices);
capsolve::Condenser curve_condenser(const hypgeom::BoundaryCurve& curve,
                                    int samples = 1024);
capsolve::Condenser ring_condenser(const ringbound::PolygonalRing& ring);
capsolve::Condenser star_slit_condenser(int m, double s);

}  // namespace condcap::geomgen
