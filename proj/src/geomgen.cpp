#include "condcap/geomgen.hpp"

#include <cmath>
#include <stdexcept>

#include "condcap/capforms.hpp"

namespace condcap::geomgen {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double cross(cpx o, cpx a, cpx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool is_convex(const std::vector<cpx>& v) {
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    if (cross(v[i], v[(i + 1) % m], v[(i + 2) % m]) <= 0.0) return false;
  }
  return true;
}

bool has_reflex(const std::vector<cpx>& v) {
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i)
    if (cross(v[i], v[(i + 1) % m], v[(i + 2) % m]) < 0.0) return true;
  return false;
}

bool segments_cross(cpx p1, cpx p2, cpx q1, cpx q2) {
  const double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool is_simple(const std::vector<cpx>& v) {
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (j == i || (j + 1) % m == i || (i + 1) % m == j) continue;
      if (segments_cross(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m]))
        return false;
    }
  }
  return true;
}

}  // namespace

double SeededRng::uniform() {
  const std::uint64_t bits = mix64(seed_ + counter_++ * 0x9E3779B97F4A7C15ull);
  // 53 bits, strictly inside (0,1)
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

int SeededRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

SeededRng SeededRng::split(std::uint64_t stream) const {
  return SeededRng(mix64(seed_ ^ mix64(stream + 0x685835D9F9A5AEF2ull)));
}

PolygonSample gen_convex_polygon(SeededRng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolygonSample out;
    out.m = rng.uniform_int(3, 12);
    out.s = 0.05 + 0.9 * rng.uniform();
    out.vertices.resize(out.m);
    for (int j = 1; j <= out.m; ++j) {
      const double theta = (j - 1.25 + 0.5 * rng.uniform()) * kTwoPi / out.m;
      out.vertices[j - 1] = out.s * std::exp(cpx(0.0, theta));
    }
    // angularly sorted points on a circle are convex; the check is cheap
    // insurance against degenerate draws
    if (is_convex(out.vertices)) return out;
  }
  throw std::runtime_error("gen_convex_polygon: redraw cap exceeded");
}

hypgeom::BoundaryCurve gen_hyperbolic_polygon(SeededRng& rng,
                                              std::vector<cpx>* vertices_out) {
  const PolygonSample poly = gen_convex_polygon(rng);
  if (poly.m < 3)
    throw std::invalid_argument("gen_hyperbolic_polygon: need m >= 3");
  std::vector<hypgeom::CurveSegment> pieces;
  pieces.reserve(poly.m);
  for (int i = 0; i < poly.m; ++i)
    pieces.push_back(hypgeom::geodesic_arc(poly.vertices[i],
                                           poly.vertices[(i + 1) % poly.m]));
  if (vertices_out) *vertices_out = poly.vertices;
  const int n = 2 * std::max(64, 16 * poly.m);
  return hypgeom::make_piecewise_curve(std::move(pieces), n);
}

PolygonSample gen_nonconvex_polygon(SeededRng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolygonSample out;
    out.m = rng.uniform_int(3, 12);
    out.vertices.resize(out.m);
    for (int j = 1; j <= out.m; ++j) {
      const double theta = (j - 1.25 + 0.5 * rng.uniform()) * kTwoPi / out.m;
      const double s = (j % 2 == 1) ? 0.5 + 0.45 * rng.uniform()
                                    : 0.05 + 0.45 * rng.uniform();
      out.vertices[j - 1] = s * std::exp(cpx(0.0, theta));
    }
    if (has_reflex(out.vertices) && is_simple(out.vertices)) return out;
  }
  throw std::runtime_error("gen_nonconvex_polygon: redraw cap exceeded");
}

hypgeom::BoundaryCurve build_Et(double theta, double r, double t, int n) {
  if (!(t > 0.0 && 3.0 * t <= capforms::et_tmax(theta, r)))
    throw std::domain_error("build_Et: t violates 0 < 3t <= rho(r, r e^{i theta})");
  const double u = std::tanh(std::atanh(r) + 0.5 * t);
  const double v = std::tanh(std::atanh(r) - 0.5 * t);
  // caps: Euclidean images of the hyperbolic disks at the arc endpoints
  const auto cap0 = hypgeom::hyp_disk_to_euclidean(cpx(r, 0.0), t);
  const double m0 = cap0.center.real(), rho0 = cap0.radius;
  const cpx rot = std::exp(cpx(0.0, theta));

  std::vector<hypgeom::CurveSegment> pieces;
  // cap at angle theta, from v e^{i theta} to u e^{i theta} through the gap
  pieces.push_back(hypgeom::CurveSegment{
      [m0, rho0, rot, theta](double s) {
        const double psi = kPi + kPi * s;
        return rot * (m0 + rho0 * std::exp(cpx(0.0, psi)));
      },
      [m0, rho0, rot, theta](double s) {
        const double psi = kPi + kPi * s;
        return rot * cpx(0.0, kPi) * rho0 * std::exp(cpx(0.0, psi));
      }});
  // outer arc |z| = u, theta -> 2 pi
  pieces.push_back(hypgeom::CurveSegment{
      [u, theta](double s) {
        const double ang = theta + (kTwoPi - theta) * s;
        return u * std::exp(cpx(0.0, ang));
      },
      [u, theta](double s) {
        const double ang = theta + (kTwoPi - theta) * s;
        return cpx(0.0, kTwoPi - theta) * u * std::exp(cpx(0.0, ang));
      }});
  // cap at angle 0, from u to v through the gap side (positive angles)
  pieces.push_back(hypgeom::CurveSegment{
      [m0, rho0](double s) {
        const double psi = kPi * s;
        return cpx(m0, 0.0) + rho0 * std::exp(cpx(0.0, psi));
      },
      [m0, rho0](double s) {
        const double psi = kPi * s;
        return cpx(0.0, kPi) * rho0 * std::exp(cpx(0.0, psi));
      }});
  // inner arc |z| = v, 2 pi -> theta
  pieces.push_back(hypgeom::CurveSegment{
      [v, theta](double s) {
        const double ang = kTwoPi - (kTwoPi - theta) * s;
        return v * std::exp(cpx(0.0, ang));
      },
      [v, theta](double s) {
        const double ang = kTwoPi - (kTwoPi - theta) * s;
        return cpx(0.0, -(kTwoPi - theta)) * v * std::exp(cpx(0.0, ang));
      }});
  return hypgeom::make_piecewise_curve(std::move(pieces), n);
}

capsolve::Condenser build_halfdisk(double x, double t) {
  if (!(x > 0.0 && x < 1.0) || !(t > 0.0))
    throw std::domain_error("build_halfdisk: need x in (0,1) and t > 0");
  const auto disk = hypgeom::hyp_disk_to_euclidean(cpx(x, 0.0), t);
  const double m = disk.center.real(), r = disk.radius;
  if (!(m + r < 1.0))
    throw std::domain_error("build_halfdisk: half-disk not contained in the unit disk");
  capsolve::Condenser cond;
  std::vector<cpx> loop;
  const int n = 512;
  // diameter on the real axis, then the upper semicircle
  for (int i = 0; i < n; ++i)
    loop.emplace_back(m - r + 2.0 * r * i / n, 0.0);
  for (int i = 0; i < n; ++i)
    loop.push_back(cpx(m, 0.0) + r * std::exp(cpx(0.0, kPi * i / n)));
  cond.inner_loops.push_back(std::move(loop));
  return cond;
}

hypgeom::BoundaryCurve halfdisk_boundary(double x, double t, int n) {
  const auto disk = hypgeom::hyp_disk_to_euclidean(cpx(x, 0.0), t);
  const double m = disk.center.real(), r = disk.radius;
  std::vector<hypgeom::CurveSegment> pieces;
  pieces.push_back(hypgeom::CurveSegment{
      [m, r](double s) { return cpx(m - r + 2.0 * r * s, 0.0); },
      [r](double) { return cpx(2.0 * r, 0.0); }});
  pieces.push_back(hypgeom::CurveSegment{
      [m, r](double s) { return cpx(m, 0.0) + r * std::exp(cpx(0.0, kPi * s)); },
      [m, r](double s) {
        return cpx(0.0, kPi) * r * std::exp(cpx(0.0, kPi * s));
      }});
  return hypgeom::make_piecewise_curve(std::move(pieces), n);
}

ringbound::PolygonalRing gen_trapezium_ring(int m, SeededRng& rng) {
  if (m < 3) throw std::domain_error("gen_trapezium_ring: need m >= 3");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ringbound::PolygonalRing ring;
    ring.outer.resize(m);
    ring.inner.resize(m);
    for (int j = 1; j <= m; ++j) {
      const double lam = rng.uniform(), tau = rng.uniform();
      const double theta = (j - 1.2 + 0.4 * tau) * kTwoPi / m;
      ring.outer[j - 1] = (3.0 - 0.5 * lam) * std::exp(cpx(0.0, theta));
    }
    for (int j = 1; j <= m; ++j) {
      const double lam = rng.uniform(), tau = rng.uniform();
      const double theta = (j - 1.2 + 0.4 * tau) * kTwoPi / m;
      ring.inner[j - 1] = (1.0 + 0.5 * lam) * std::exp(cpx(0.0, theta));
    }
    try {
      ringbound::validate_ring(ring);
      return ring;
    } catch (const std::invalid_argument&) {
      // redraw
    }
  }
  throw std::runtime_error("gen_trapezium_ring: disjointness redraw cap exceeded");
}

capsolve::Condenser polygon_condenser(const std::vector<cpx>& vertices) {
  capsolve::Condenser cond;
  cond.inner_loops.push_back(vertices);
  return cond;
}

capsolve::Condenser curve_condenser(const hypgeom::BoundaryCurve& curve,
                                    int samples) {
  capsolve::Condenser cond;
  std::vector<cpx> loop(samples);
  for (int i = 0; i < samples; ++i)
    loop[i] = curve.eval(kTwoPi * i / samples);
  cond.inner_loops.push_back(std::move(loop));
  return cond;
}

capsolve::Condenser ring_condenser(const ringbound::PolygonalRing& ring) {
  capsolve::Condenser cond;
  cond.outer = ring.outer;
  cond.inner_loops.push_back(ring.inner);
  return cond;
}

capsolve::Condenser star_slit_condenser(int m, double s) {
  if (m < 3 || !(s > 0.0 && s < 1.0))
    throw std::domain_error("star_slit_condenser: need m >= 3, s in (0,1)");
  capsolve::Condenser cond;
  for (int k = 1; k <= m; ++k) {
    const cpx tip = s * std::exp(cpx(0.0, kTwoPi * k / m));
    cond.inner_slits.push_back({cpx(0.0, 0.0), tip});
  }
  return cond;
}

}  // namespace condcap::geomgen
