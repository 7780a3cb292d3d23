#include "condcap/ringbound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "condcap/quadmod.hpp"

namespace condcap::ringbound {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cross(cpx o, cpx a, cpx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

// strict transversal crossing of open segments, with slack for shared
// endpoints and collinear touching
bool segments_cross(cpx p1, cpx p2, cpx q1, cpx q2) {
  const double scale = std::max({std::abs(p2 - p1), std::abs(q2 - q1), 1.0});
  const double eps = 1e-14 * scale * scale;
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  return ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
         ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
}

bool point_in_polygon(cpx z, const std::vector<cpx>& poly) {
  bool inside = false;
  const size_t m = poly.size();
  for (size_t i = 0, j = m - 1; i < m; j = i++) {
    const cpx a = poly[i], b = poly[j];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
      const double xint = a.real() + (z.imag() - a.imag()) *
                                         (b.real() - a.real()) /
                                         (b.imag() - a.imag());
      if (z.real() < xint) inside = !inside;
    }
  }
  return inside;
}

std::vector<std::vector<cpx>> ring_quads(const PolygonalRing& ring) {
  const size_t m = ring.outer.size();
  std::vector<std::vector<cpx>> quads(m);
  for (size_t j = 0; j < m; ++j) {
    const size_t jn = (j + 1) % m;
    quads[j] = {ring.outer[j], ring.outer[jn], ring.inner[jn], ring.inner[j]};
  }
  return quads;
}

}  // namespace

std::pair<cpx, cpx> normalize_quadrilateral(cpx p0, cpx p1, cpx p2, cpx p3) {
  const cpx den = p1 - p0;
  if (std::abs(den) == 0.0)
    throw std::domain_error("normalize_quadrilateral: degenerate base side");
  return {(p2 - p0) / den, (p3 - p0) / den};
}

void validate_ring(const PolygonalRing& ring) {
  const size_t m = ring.outer.size();
  if (m < 3 || ring.inner.size() != m)
    throw std::invalid_argument("ring: need matching chains with m >= 3");
  if (ring.degenerate_inner) return;  // slit traversals fail planar checks
  for (const cpx& b : ring.inner)
    if (!point_in_polygon(b, ring.outer))
      throw std::invalid_argument("ring: inner vertex outside the outer polygon");
  const auto quads = ring_quads(ring);
  // interior probes catch overlaps that share edges instead of crossing them
  const double probes[5][2] = {{0.381966, 0.276393},
                               {0.723607, 0.276393},
                               {0.5, 0.521},
                               {0.276393, 0.723607},
                               {0.723607, 0.723607}};
  auto bilinear = [](const std::vector<cpx>& q, double u, double v) {
    return (1 - u) * (1 - v) * q[0] + u * (1 - v) * q[1] + u * v * q[2] +
           (1 - u) * v * q[3];
  };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      for (int ei = 0; ei < 4; ++ei) {
        for (int ej = 0; ej < 4; ++ej) {
          if (segments_cross(quads[i][ei], quads[i][(ei + 1) % 4],
                             quads[j][ej], quads[j][(ej + 1) % 4]))
            throw std::invalid_argument(
                "ring: quadrilaterals " + std::to_string(i) + " and " +
                std::to_string(j) + " overlap");
        }
      }
      for (const auto& p : probes) {
        if (point_in_polygon(bilinear(quads[i], p[0], p[1]), quads[j]) ||
            point_in_polygon(bilinear(quads[j], p[0], p[1]), quads[i]))
          throw std::invalid_argument(
              "ring: quadrilaterals " + std::to_string(i) + " and " +
              std::to_string(j) + " overlap");
      }
    }
  }
}

double quad_modulus(cpx p0, cpx p1, cpx p2, cpx p3) {
  auto [A, B] = normalize_quadrilateral(p0, p1, p2, p3);
  if (quadmod::collinear_marked(A, B)) return quadmod::qmt(A, B);
  // mirrored marking (p1, p0, p3, p2) carries the same modulus; try it when
  // the collinear triple sits at the other end of the quadrilateral
  auto [Am, Bm] = normalize_quadrilateral(p1, p0, p3, p2);
  Am = std::conj(Am);
  Bm = std::conj(Bm);
  if (quadmod::collinear_marked(Am, Bm)) return quadmod::qmt(Am, Bm);
  return quadmod::qm(A, B);
}

std::vector<double> ring_quad_contributions(const PolygonalRing& ring) {
  const size_t m = ring.outer.size();
  std::vector<double> out(m);
  for (size_t j = 0; j < m; ++j) {
    const size_t jn = (j + 1) % m;
    try {
      out[j] = 1.0 / quad_modulus(ring.outer[j], ring.outer[jn],
                                  ring.inner[jn], ring.inner[j]);
    } catch (const std::exception& e) {
      throw std::runtime_error("ring quadrilateral " + std::to_string(j) +
                               ": " + e.what());
    }
  }
  return out;
}

double ring_lower_bound(const PolygonalRing& ring) {
  validate_ring(ring);
  double sum = 0.0;
  for (double v : ring_quad_contributions(ring)) sum += v;
  return sum;
}

double cap_regular_ring(int m, double lambda) {
  if (m < 3) throw std::domain_error("cap_regular_ring: requires m >= 3");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::domain_error("cap_regular_ring: lambda must lie in (0,1)");
  const double cot = 1.0 / std::tan(kPi / m);
  const cpx A(0.5 * (1.0 + lambda), 0.5 * (1.0 - lambda) * cot);
  const cpx B(0.5 * (1.0 - lambda), 0.5 * (1.0 - lambda) * cot);
  return m / quadmod::qm(A, B);
}

PolygonalRing rect_segment_ring(const capforms::RectSegmentSpec& spec) {
  const double a = spec.a, b = spec.b, c = spec.c, d = spec.d;
  capforms::make_rect_segment(a, b, c, d);  // re-validate
  const double y1 = c + (d - c) / 3.0;
  const double y2 = c + 2.0 * (d - c) / 3.0;
  PolygonalRing ring;
  ring.outer = {cpx(a, 0), cpx(a, b), cpx(0, b), cpx(-a, b), cpx(-a, 0), cpx(0, 0)};
  // slit traversal: up the right side, around the top tip, down the left
  // side, around the bottom tip
  ring.inner = {cpx(0, y1), cpx(0, y2), cpx(0, d), cpx(0, y2), cpx(0, y1), cpx(0, c)};
  ring.degenerate_inner = true;
  return ring;
}

double rect_segment_lower_bound(const capforms::RectSegmentSpec& spec) {
  const PolygonalRing ring = rect_segment_ring(spec);
  // mirror symmetry: M(Q1)=M(Q4), M(Q2)=M(Q3), M(Q5)=M(Q6)
  const auto& o = ring.outer;
  const auto& i = ring.inner;
  const double m1 = quad_modulus(o[0], o[1], i[1], i[0]);
  const double m2 = quad_modulus(o[1], o[2], i[2], i[1]);
  const double m5 = quad_modulus(o[4], o[5], i[5], i[4]);
  return 2.0 * (1.0 / m1 + 1.0 / m2 + 1.0 / m5);
}

}  // namespace condcap::ringbound
