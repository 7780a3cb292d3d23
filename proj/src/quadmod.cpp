#include "condcap/quadmod.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "condcap/numutil.hpp"
#include "condcap/specfun.hpp"

namespace condcap::quadmod {

namespace {

constexpr double kPi = 3.14159265358979323846;

using specfun::beta_fn;
using specfun::hyp2f1;
using specfun::hyp2f1_above_cut;
using specfun::mu;

struct QmProblem {
  double a, b, c;
  double rhs;  // Re((A-1)/L)
};

QmProblem qm_setup(cpx A, cpx B) {
  if (!(A.imag() > 0.0) || !(B.imag() > 0.0))
    throw std::domain_error("qm: A and B must lie in the upper half-plane");
  const double a = 1.0 - (std::arg(A - 1.0) - std::arg(A - B)) / kPi;
  const double b = std::arg(B) / kPi;
  const double c = (kPi - std::arg(A - 1.0) + std::arg(B)) / kPi;
  const cpx L = beta_fn(c - b, 1.0 - a) / beta_fn(b, c - b) *
                std::exp(cpx(0.0, (b + 1.0 - c) * kPi));
  return QmProblem{a, b, c, ((A - 1.0) / L).real()};
}

// The two exact-complement evaluations of h: one parametrized by w = r^2
// (accurate near r = 0), one by w = r'^2 (accurate near r = 1). Both keep
// full precision where the plain 1-r^2 would round away.
double qm_h_r2(const QmProblem& p, double w) {
  const double delta = p.c - p.a - p.b;
  const double den = hyp2f1(p.a, p.b, p.c, w);
  const double num =
      std::exp(delta * std::log1p(-w)) *
      specfun::hyp2f1_near_one(p.c - p.a, p.c - p.b, p.c + 1.0 - p.a - p.b, w);
  return num / den - p.rhs;
}

double qm_h_rp2(const QmProblem& p, double w) {
  const double delta = p.c - p.a - p.b;
  const double den = specfun::hyp2f1_near_one(p.a, p.b, p.c, w);
  const double num = std::pow(w, delta) *
                     hyp2f1(p.c - p.a, p.c - p.b, p.c + 1.0 - p.a - p.b, w);
  return num / den - p.rhs;
}

double qm_h(const QmProblem& p, double r) {
  r = std::clamp(r, 1e-140, 1.0 - 1e-13);
  if (r <= 0.7071067811865476) return qm_h_r2(p, r * r);
  return qm_h_rp2(p, (1.0 - r) * (1.0 + r));
}

}  // namespace

double qm(cpx A, cpx B) { return qm(A, B, QmOptions{}); }

double qm(cpx A, cpx B, const QmOptions& opts) {
  const QmProblem p = qm_setup(A, B);
  auto h = [&p](double r) { return qm_h(p, r); };
  const double h_lo = h(opts.bracket_lo), h_hi = h(opts.bracket_hi);
  double root = -1.0;
  bool have_root = false;
  if (h_lo * h_hi < 0.0) {
    root = num::brent_root(h, opts.bracket_lo, opts.bracket_hi, 1e-15);
    have_root = true;
  }
  if (!have_root) {
    // elongated quadrilaterals push the root exponentially close to an
    // endpoint; chase it on a log scale in r, then in r'^2
    auto hlog = [&p](double t) { return qm_h_r2(p, std::exp(2.0 * t)); };
    const double t_lo = std::log(1e-140), t_hi = std::log(opts.bracket_lo);
    if (h_lo * hlog(t_lo) < 0.0) {
      root = std::exp(num::brent_root(hlog, t_lo, t_hi, 1e-13));
      have_root = true;
    }
  }
  if (!have_root) {
    auto hlogp = [&p](double s) { return qm_h_rp2(p, std::exp(s)); };
    const double w_hi = (1.0 - opts.bracket_hi) * (1.0 + opts.bracket_hi);
    const double s_lo = std::log(1e-280), s_hi = std::log(w_hi);
    if (h_hi * hlogp(s_lo) < 0.0) {
      const double w = std::exp(num::brent_root(hlogp, s_lo, s_hi, 1e-13));
      // mu(r) mu(r') = pi^2/4 turns the complement root into the modulus
      if (std::abs(qm_h_rp2(p, w)) > 1e-6)
        throw std::runtime_error("qm: root solve left a large residual");
      return 0.5 * kPi / mu(std::sqrt(w));
    }
  }
  if (!have_root) {
    auto h2 = [&h](double r) { const double v = h(r); return v * v; };
    root = num::brent_minimize(h2, 0.0, 1.0, 1e-12);
  }
  // one Newton polish with a central difference, kept only if it helps
  {
    const double step = 1e-7;
    if (root > 2.0 * step && root < 1.0 - 2.0 * step) {
      const double h0 = h(root);
      const double d = (h(root + step) - h(root - step)) / (2.0 * step);
      if (d != 0.0) {
        const double cand = root - h0 / d;
        if (cand > 0.0 && cand < 1.0 && std::abs(h(cand)) < std::abs(h0))
          root = cand;
      }
    }
  }
  if (std::abs(h(root)) > 1e-6)
    throw std::runtime_error("qm: root solve left a large residual");
  // roots near the ends lose digits through the 1 - r^2 rounding; re-solve
  // there in the exact complement variable
  if (root < 0.01) {
    auto hl = [&p](double t) { return qm_h_r2(p, std::exp(2.0 * t)); };
    double t_lo = std::log(std::max(root, 1e-140)) - 1.5;
    double t_hi = std::min(std::log(root) + 1.5, std::log(0.011));
    if (hl(t_lo) * hl(t_hi) < 0.0)
      root = std::exp(num::brent_root(hl, t_lo, t_hi, 1e-13));
  } else if (root > 0.99) {
    auto hs = [&p](double s) { return qm_h_rp2(p, std::exp(s)); };
    const double w0 = std::max((1.0 - root) * (1.0 + root), 1e-280);
    double s_lo = std::log(w0) - 1.5;
    double s_hi = std::min(std::log(w0) + 1.5, std::log(0.02));
    if (hs(s_lo) * hs(s_hi) < 0.0) {
      const double w = std::exp(num::brent_root(hs, s_lo, s_hi, 1e-13));
      return 0.5 * kPi / mu(std::sqrt(w));
    }
  }
  return 2.0 / kPi * mu(root);
}

bool collinear_marked(cpx A, cpx B) {
  const cpx u = A - 1.0, v = B - 1.0;
  const double scale = std::norm(v);
  if (scale == 0.0) return false;
  if (std::abs(std::imag(u * std::conj(v))) > 1e-10 * scale) return false;
  const double t = std::real(u * std::conj(v)) / scale;
  return t > 0.0 && t < 1.0;
}

double qmt(cpx A, cpx B) {
  if (!(B.imag() > 0.0))
    throw std::domain_error("qmt: B must lie in the upper half-plane");
  if (!collinear_marked(A, B))
    throw std::domain_error("qmt: A must lie strictly inside the segment [1,B]");
  const double alpha = std::arg(B);
  const double beta = kPi - std::arg(B - 1.0);
  if (!(alpha > 0.0 && alpha < kPi) || !(beta > 0.0 && beta < kPi))
    throw std::domain_error("qmt: interior angles must lie in (0,pi)");
  const double ap = alpha / kPi, bp = beta / kPi;
  const double front =
      std::exp(std::lgamma(ap + bp) - std::lgamma(ap) - std::lgamma(bp)) / ap;
  const cpx phase = std::exp(cpx(0.0, beta));
  auto h_at = [&](double s) {
    return (phase * (front * std::pow(s, ap) *
                         hyp2f1_above_cut(ap, 1.0 - bp, ap + 1.0, s) -
                     A))
        .real();
  };
  // sigma = s - 1 kept exact, for roots exponentially close to 1
  auto h_sigma = [&](double sigma) {
    const cpx F =
        specfun::hyp2f1_above_cut_near_one(ap, 1.0 - bp, ap + 1.0, sigma);
    return (phase * (front * std::pow(1.0 + sigma, ap) * F - A)).real();
  };
  // h(1) = Re(e^{i beta}(1 - A)) = |A-1| > 0 and h decreases along the
  // prevertex ray, so bracket the sign change outward from s = 3/2
  double s_root = 0.0, sigma_root = -1.0;
  if (h_sigma(0.5) <= 0.0) {
    auto hlog = [&](double t) { return h_sigma(std::exp(t)); };
    const double t_lo = std::log(1e-130), t_hi = std::log(0.5);
    if (hlog(t_lo) <= 0.0)
      throw std::runtime_error("qmt: quadrilateral too degenerate to resolve");
    sigma_root = std::exp(num::brent_root(hlog, t_lo, t_hi, 1e-13));
  } else {
    double lo = 1.5, hi = 10.0;
    int doublings = 0;
    while (h_at(lo) * h_at(hi) > 0.0) {
      hi *= 2.0;
      if (++doublings > 60)
        throw std::runtime_error("qmt: bracket growth failed after 60 doublings");
    }
    s_root = num::brent_root(h_at, lo, hi, 1e-14);
  }
  const double ratio =
      sigma_root >= 0.0 ? sigma_root / (1.0 + sigma_root) : 1.0 - 1.0 / s_root;
  return 0.5 * kPi / mu(std::sqrt(ratio));
}

std::pair<cpx, cpx> qm_symmetry_pair(cpx A, cpx B) {
  return {1.0 - std::conj(B), 1.0 - std::conj(A)};
}

}  // namespace condcap::quadmod
