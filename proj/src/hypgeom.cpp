#include "condcap/hypgeom.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "condcap/numutil.hpp"

namespace condcap::hypgeom {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

void require_inside(cpx z, const char* who) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error(std::string(who) + ": point outside the unit disk");
}
}  // namespace

double rho_disk(cpx x, cpx y) {
  require_inside(x, "rho_disk");
  require_inside(y, "rho_disk");
  const double num = std::abs(x - y);
  const double den = std::sqrt((1.0 - std::norm(x)) * (1.0 - std::norm(y)));
  return 2.0 * std::asinh(num / den);
}

EuclideanDisk hyp_disk_to_euclidean(cpx x, double M) {
  require_inside(x, "hyp_disk_to_euclidean");
  if (!(M > 0.0)) throw std::domain_error("hyp_disk_to_euclidean: M must be > 0");
  const double t = std::tanh(0.5 * M);
  const double den = 1.0 - std::norm(x) * t * t;
  return EuclideanDisk{x * (1.0 - t * t) / den, (1.0 - std::norm(x)) * t / den};
}

double circle_perimeter_hyp(double R) {
  if (!(R > 0.0)) throw std::domain_error("circle_perimeter_hyp: R must be > 0");
  return kTwoPi * std::sinh(R);
}

double disk_area_hyp(double R) {
  if (!(R > 0.0)) throw std::domain_error("disk_area_hyp: R must be > 0");
  const double s = std::sinh(0.5 * R);
  return 4.0 * kPi * s * s;
}

namespace {

double hyp_density(cpx z) {
  const double r2 = std::norm(z);
  if (!(r2 < 1.0))
    throw std::domain_error("perimeter: curve point outside the unit disk");
  return 2.0 / (1.0 - r2);
}

}  // namespace

double perimeter_trapezoid(const BoundaryCurve& curve) {
  if (!curve.has_corners()) {
    const int n = curve.n;
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
      sum += std::abs(curve.derivatives[k]) * hyp_density(curve.positions[k]);
    return kTwoPi / n * sum;
  }
  // corner curves lose spectral accuracy; integrate each smooth piece
  if (!curve.eval || !curve.deriv)
    throw std::invalid_argument("perimeter_trapezoid: corner curve lacks evaluators");
  double total = 0.0;
  const auto& cs = curve.corners;
  for (size_t i = 0; i < cs.size(); ++i) {
    const double s0 = cs[i];
    const double s1 = (i + 1 < cs.size()) ? cs[i + 1] : cs[0] + kTwoPi;
    total += num::gauss_integrate(
        [&](double s) {
          return std::abs(curve.deriv(s)) * hyp_density(curve.eval(s));
        },
        s0, s1, 64);
  }
  return total;
}

std::vector<cpx> spectral_derivative(const std::vector<cpx>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("spectral_derivative: even sample count required");
  // direct DFT; node counts here are small
  std::vector<cpx> coef(n);
  for (int k = 0; k < n; ++k) {
    cpx acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double ang = -kTwoPi * k * j / n;
      acc += samples[j] * cpx(std::cos(ang), std::sin(ang));
    }
    coef[k] = acc / static_cast<double>(n);
  }
  std::vector<cpx> out(n, cpx(0.0));
  for (int k = 0; k < n; ++k) {
    // frequencies: k for k < n/2, k-n for k > n/2, Nyquist mode zeroed
    int freq;
    if (k < n / 2) freq = k;
    else if (k == n / 2) continue;
    else freq = k - n;
    const cpx ik(0.0, static_cast<double>(freq));
    for (int j = 0; j < n; ++j) {
      const double ang = kTwoPi * k * j / n;
      out[j] += ik * coef[k] * cpx(std::cos(ang), std::sin(ang));
    }
  }
  return out;
}

double polygon_hyp_perimeter(const std::vector<cpx>& vertices) {
  if (vertices.size() < 2)
    throw std::invalid_argument("polygon_hyp_perimeter: need at least 2 vertices");
  double sum = 0.0;
  const size_t m = vertices.size();
  for (size_t j = 0; j < m; ++j)
    sum += rho_disk(vertices[j], vertices[(j + 1) % m]);
  return sum;
}

CurveSegment geodesic_arc(cpx v, cpx w) {
  require_inside(v, "geodesic_arc");
  require_inside(w, "geodesic_arc");
  if (std::abs(v - w) == 0.0)
    throw std::invalid_argument("geodesic_arc: coincident endpoints");
  const double cross = std::imag(std::conj(v) * w);
  if (std::abs(cross) < 1e-12) {
    // v, w on a diameter: the geodesic is the Euclidean chord
    return CurveSegment{
        [v, w](double t) { return v + t * (w - v); },
        [v, w](double) { return w - v; }};
  }
  // center of the circle through v, w orthogonal to the unit circle
  const cpx c = (w * (1.0 + std::norm(v)) - v * (1.0 + std::norm(w))) /
                (cpx(0.0, 2.0) * cross);
  const double R = std::abs(v - c);
  const double av = std::arg(v - c);
  double dw = std::arg(w - c) - av;
  if (dw > kPi) dw -= kTwoPi;
  if (dw < -kPi) dw += kTwoPi;
  const double sweep = dw;
  return CurveSegment{
      [c, R, av, sweep](double t) {
        return c + R * std::exp(cpx(0.0, av + sweep * t));
      },
      [c, R, av, sweep](double t) {
        return cpx(0.0, sweep) * R * std::exp(cpx(0.0, av + sweep * t));
      }};
}

std::vector<cpx> sample_segment(const CurveSegment& seg, int samples) {
  std::vector<cpx> out(samples);
  for (int i = 0; i < samples; ++i)
    out[i] = seg.point(samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1));
  return out;
}

double hyp_length(const CurveSegment& seg) {
  return num::gauss_integrate(
      [&](double t) { return std::abs(seg.tangent(t)) * hyp_density(seg.point(t)); },
      0.0, 1.0, 64);
}

BoundaryCurve make_smooth_curve(std::function<cpx(double)> f,
                                std::function<cpx(double)> df, int n,
                                bool ccw) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("make_smooth_curve: even n required");
  BoundaryCurve c;
  c.n = n;
  c.ccw = ccw;
  c.positions.resize(n);
  c.derivatives.resize(n);
  for (int k = 0; k < n; ++k) {
    const double s = kTwoPi * k / n;
    c.positions[k] = f(s);
    c.derivatives[k] = df(s);
  }
  c.eval = std::move(f);
  c.deriv = std::move(df);
  return c;
}

BoundaryCurve make_piecewise_curve(std::vector<CurveSegment> pieces, int n,
                                   bool ccw) {
  const int m = static_cast<int>(pieces.size());
  if (m == 0) throw std::invalid_argument("make_piecewise_curve: no pieces");
  auto shared = std::make_shared<std::vector<CurveSegment>>(std::move(pieces));
  const double span = kTwoPi / m;
  auto locate = [shared, span, m](double s) {
    s = std::fmod(s, kTwoPi);
    if (s < 0) s += kTwoPi;
    int i = static_cast<int>(s / span);
    if (i >= m) i = m - 1;
    return std::pair<int, double>(i, (s - i * span) / span);
  };
  auto f = [shared, locate](double s) {
    auto [i, t] = locate(s);
    return (*shared)[i].point(t);
  };
  auto df = [shared, locate, span](double s) {
    auto [i, t] = locate(s);
    return (*shared)[i].tangent(t) / span;
  };
  if (n <= 0) n = 2 * std::max(32, 8 * m);
  BoundaryCurve c = make_smooth_curve(f, df, n, ccw);
  c.corners.resize(m);
  for (int i = 0; i < m; ++i) c.corners[i] = i * span;
  return c;
}

BoundaryCurve polygon_curve(const std::vector<cpx>& vertices, int n) {
  const int m = static_cast<int>(vertices.size());
  if (m < 3) throw std::invalid_argument("polygon_curve: need at least 3 vertices");
  std::vector<CurveSegment> pieces;
  pieces.reserve(m);
  for (int i = 0; i < m; ++i) {
    const cpx a = vertices[i], b = vertices[(i + 1) % m];
    pieces.push_back(CurveSegment{[a, b](double t) { return a + t * (b - a); },
                                  [a, b](double) { return b - a; }});
  }
  return make_piecewise_curve(std::move(pieces), n > 0 ? n : 2 * ((m + 1) / 2) * 32);
}

BoundaryCurve segment_curve(double a, int n) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("segment_curve: endpoint must lie in (0,1)");
  // out-and-back traversal xi(s) = a (1 - cos s)/2 with corners at the tips
  auto f = [a](double s) { return cpx(0.5 * a * (1.0 - std::cos(s)), 0.0); };
  auto df = [a](double s) { return cpx(0.5 * a * std::sin(s), 0.0); };
  BoundaryCurve c = make_smooth_curve(f, df, n, true);
  c.corners = {0.0, kPi};
  return c;
}

}  // namespace condcap::hypgeom
