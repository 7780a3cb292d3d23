#include "condcap/capsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace condcap::capsolve {

namespace {

struct Box {
  double xlo, xhi, ylo, yhi;
};

Box bounding_box(const Condenser& cond) {
  if (cond.outer.empty()) {
    const double m = 1.0 + cond.pad;
    return Box{-m, m, -m, m};
  }
  double xlo = std::numeric_limits<double>::max(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const cpx& v : cond.outer) {
    xlo = std::min(xlo, v.real());
    xhi = std::max(xhi, v.real());
    ylo = std::min(ylo, v.imag());
    yhi = std::max(yhi, v.imag());
  }
  const double m = cond.pad * std::max(xhi - xlo, yhi - ylo);
  return Box{xlo - m, xhi + m, ylo - m, yhi + m};
}

// scanline parity fill: marks lattice points strictly inside the polygon
void fill_inside(const std::vector<cpx>& poly, int nx, int ny, double x0,
                 double y0, double h, double off, std::vector<uint8_t>& out) {
  const size_t m = poly.size();
  std::vector<double> xs;
  for (int j = 0; j < ny; ++j) {
    const double y = y0 + (j + off) * h;
    xs.clear();
    for (size_t i = 0, prev = m - 1; i < m; prev = i++) {
      const cpx a = poly[prev], b = poly[i];
      if ((a.imag() > y) != (b.imag() > y)) {
        xs.push_back(a.real() + (y - a.imag()) * (b.real() - a.real()) /
                                    (b.imag() - a.imag()));
      }
    }
    std::sort(xs.begin(), xs.end());
    // between an odd and the following even crossing we are inside
    for (size_t t = 0; t + 1 < xs.size(); t += 2) {
      int i_lo = static_cast<int>(std::ceil((xs[t] - x0) / h - off));
      int i_hi = static_cast<int>(std::floor((xs[t + 1] - x0) / h - off));
      i_lo = std::max(i_lo, 0);
      i_hi = std::min(i_hi, nx - 1);
      for (int i = i_lo; i <= i_hi; ++i)
        out[static_cast<size_t>(j) * nx + i] = 1;
    }
  }
}

double dist_to_segment(cpx z, cpx a, cpx b) {
  const cpx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}  // namespace

double GridField::value(int i, int j) const {
  switch (at(i, j)) {
    case Cell::Interior: return u[static_cast<size_t>(j) * nx + i];
    case Cell::Dirichlet1: return 1.0;
    default: return 0.0;
  }
}

Condenser annulus_condenser(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("annulus_condenser: radius must lie in (0,1)");
  Condenser cond;
  std::vector<cpx> circle;
  const int n = 2048;
  circle.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * M_PI * k / n;
    circle.emplace_back(a * std::cos(t), a * std::sin(t));
  }
  cond.inner_loops.push_back(std::move(circle));
  return cond;
}

GridField build_grid(const Condenser& cond, double h) {
  if (!(h > 0.0)) throw std::domain_error("build_grid: h must be > 0");
  if (cond.inner_loops.empty() && cond.inner_slits.empty())
    throw std::invalid_argument("build_grid: condenser has an empty inner set");
  const Box box = bounding_box(cond);
  GridField g;
  g.h = h;
  g.nx = static_cast<int>(std::ceil((box.xhi - box.xlo) / h));
  g.ny = static_cast<int>(std::ceil((box.yhi - box.ylo) / h));
  // center the lattice so grid-aligned symmetries of the condenser carry
  // over to the mask
  g.x0 = 0.5 * (box.xlo + box.xhi) - 0.5 * g.nx * h;
  g.y0 = 0.5 * (box.ylo + box.yhi) - 0.5 * g.ny * h;
  const size_t ncells = static_cast<size_t>(g.nx) * g.ny;
  g.mask.assign(ncells, Cell::Outside);
  g.u.assign(ncells, 0.0);

  // lattice membership: cell centers (offset 1/2) and cell corners (offset 0,
  // one extra line each way)
  const int cx = g.nx + 1, cy = g.ny + 1;
  std::vector<uint8_t> center_in_G(ncells, 0), corner_in_G;
  std::vector<uint8_t> center_in_E(ncells, 0),
      corner_in_E(static_cast<size_t>(cx) * cy, 0);
  if (cond.outer.empty()) {
    corner_in_G.assign(static_cast<size_t>(cx) * cy, 0);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        center_in_G[static_cast<size_t>(j) * g.nx + i] =
            std::abs(g.center(i, j)) < 1.0;
    for (int j = 0; j < cy; ++j)
      for (int i = 0; i < cx; ++i)
        corner_in_G[static_cast<size_t>(j) * cx + i] =
            std::abs(cpx(g.x0 + i * h, g.y0 + j * h)) < 1.0;
  } else {
    corner_in_G.assign(static_cast<size_t>(cx) * cy, 0);
    fill_inside(cond.outer, g.nx, g.ny, g.x0, g.y0, h, 0.5, center_in_G);
    fill_inside(cond.outer, cx, cy, g.x0, g.y0, h, 0.0, corner_in_G);
  }
  for (const auto& loop : cond.inner_loops) {
    fill_inside(loop, g.nx, g.ny, g.x0, g.y0, h, 0.5, center_in_E);
    fill_inside(loop, cx, cy, g.x0, g.y0, h, 0.0, corner_in_E);
  }

  auto corner_hits_E = [&](int i, int j) {
    return corner_in_E[static_cast<size_t>(j) * cx + i] ||
           corner_in_E[static_cast<size_t>(j) * cx + i + 1] ||
           corner_in_E[static_cast<size_t>(j + 1) * cx + i] ||
           corner_in_E[static_cast<size_t>(j + 1) * cx + i + 1];
  };
  auto corners_all_in_G = [&](int i, int j) {
    return corner_in_G[static_cast<size_t>(j) * cx + i] &&
           corner_in_G[static_cast<size_t>(j) * cx + i + 1] &&
           corner_in_G[static_cast<size_t>(j + 1) * cx + i] &&
           corner_in_G[static_cast<size_t>(j + 1) * cx + i + 1];
  };

  size_t n_inner = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const size_t idx = static_cast<size_t>(j) * g.nx + i;
      const cpx z = g.center(i, j);
      bool in_E = center_in_E[idx] || corner_hits_E(i, j);
      if (!in_E) {
        // slits fattened to one cell width
        for (const auto& seg : cond.inner_slits) {
          if (dist_to_segment(z, seg[0], seg[1]) <= 0.5 * h) {
            in_E = true;
            break;
          }
        }
      }
      if (in_E) {
        g.mask[idx] = Cell::Dirichlet1;
        ++n_inner;
      } else if (center_in_G[idx] && corners_all_in_G(i, j)) {
        g.mask[idx] = Cell::Interior;
      }
    }
  }
  if (n_inner == 0)
    throw std::invalid_argument("build_grid: inner set vanished under masking");

  // cells outside G adjacent to the interior carry the u = 0 boundary value
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const size_t idx = static_cast<size_t>(j) * g.nx + i;
      if (g.mask[idx] != Cell::Outside) continue;
      const bool near_interior =
          (i > 0 && g.at(i - 1, j) == Cell::Interior) ||
          (i + 1 < g.nx && g.at(i + 1, j) == Cell::Interior) ||
          (j > 0 && g.at(i, j - 1) == Cell::Interior) ||
          (j + 1 < g.ny && g.at(i, j + 1) == Cell::Interior);
      if (near_interior) g.mask[idx] = Cell::Dirichlet0;
    }
  }

  // resolution guard: the inner/outer gap must span at least 4 cells
  const int reach = 3;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (g.at(i, j) != Cell::Dirichlet1) continue;
      for (int dj = -reach; dj <= reach; ++dj) {
        for (int di = -reach; di <= reach; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= g.nx || jj >= g.ny) continue;
          const Cell c = g.at(ii, jj);
          if (c == Cell::Dirichlet0 || c == Cell::Outside)
            throw std::runtime_error(
                "build_grid: inner/outer gap narrower than 4 cells");
        }
      }
    }
  }
  return g;
}

SolveStats solve_potential(GridField& g, double tol, int max_iter) {
  const int nx = g.nx, ny = g.ny;
  std::vector<int> index(static_cast<size_t>(nx) * ny, -1);
  std::vector<int> cells;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (g.at(i, j) == Cell::Interior) {
        index[static_cast<size_t>(j) * nx + i] =
            static_cast<int>(cells.size());
        cells.push_back(j * nx + i);
      }
  const int n = static_cast<int>(cells.size());
  if (n == 0) throw std::runtime_error("solve_potential: no interior cells");

  // A x = b with A = 5-point Laplacian (h^2 scaled out), Dirichlet values
  // moved to the right-hand side; neighbor indices flattened once
  std::vector<double> b(n, 0.0);
  std::vector<int> nbr(static_cast<size_t>(n) * 4, -1);
  for (int r = 0; r < n; ++r) {
    const int i = cells[r] % nx, j = cells[r] / nx;
    const int off[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (int s = 0; s < 4; ++s) {
      const int ii = i + off[s][0], jj = j + off[s][1];
      if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) continue;
      const size_t idx = static_cast<size_t>(jj) * nx + ii;
      if (index[idx] >= 0)
        nbr[static_cast<size_t>(r) * 4 + s] = index[idx];
      else if (g.mask[idx] == Cell::Dirichlet1)
        b[r] += 1.0;
    }
  }
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    const int* nb = nbr.data();
    const double* xp = x.data();
    for (int r = 0; r < n; ++r) {
      double acc = 4.0 * xp[r];
      const int* q = nb + static_cast<size_t>(r) * 4;
      if (q[0] >= 0) acc -= xp[q[0]];
      if (q[1] >= 0) acc -= xp[q[1]];
      if (q[2] >= 0) acc -= xp[q[2]];
      if (q[3] >= 0) acc -= xp[q[3]];
      y[r] = acc;
    }
  };

  // start from whatever u already holds (zero, or a coarse-level warm start)
  std::vector<double> x(n), rvec(n), z(n), p(n), Ap(n);
  for (int r = 0; r < n; ++r) x[r] = g.u[cells[r]];
  apply(x, rvec);
  for (int r = 0; r < n; ++r) rvec[r] = b[r] - rvec[r];
  // Jacobi preconditioner: constant diagonal 4
  auto precond = [&](const std::vector<double>& rin, std::vector<double>& zout) {
    for (int t = 0; t < n; ++t) zout[t] = 0.25 * rin[t];
  };
  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) bnorm = 1.0;

  precond(rvec, z);
  p = z;
  double rz = 0.0;
  for (int t = 0; t < n; ++t) rz += rvec[t] * z[t];
  SolveStats stats;
  double rnorm = 0.0;
  for (double v : rvec) rnorm += v * v;
  rnorm = std::sqrt(rnorm);
  int it = 0;
  while (rnorm / bnorm > tol && it < max_iter) {
    apply(p, Ap);
    double pAp = 0.0;
    for (int t = 0; t < n; ++t) pAp += p[t] * Ap[t];
    const double alpha = rz / pAp;
    for (int t = 0; t < n; ++t) x[t] += alpha * p[t];
    for (int t = 0; t < n; ++t) rvec[t] -= alpha * Ap[t];
    precond(rvec, z);
    double rz_new = 0.0;
    for (int t = 0; t < n; ++t) rz_new += rvec[t] * z[t];
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int t = 0; t < n; ++t) p[t] = z[t] + beta * p[t];
    rnorm = 0.0;
    for (double v : rvec) rnorm += v * v;
    rnorm = std::sqrt(rnorm);
    ++it;
  }
  if (rnorm / bnorm > tol)
    throw std::runtime_error("solve_potential: CG failed to converge");
  stats.iterations = it;
  stats.residual = rnorm / bnorm;
  for (int r = 0; r < n; ++r) g.u[cells[r]] = x[r];
  return stats;
}

double dirichlet_energy(const GridField& g) {
  double energy = 0.0;
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const bool any_interior = g.at(i, j) == Cell::Interior ||
                                g.at(i + 1, j) == Cell::Interior ||
                                g.at(i, j + 1) == Cell::Interior ||
                                g.at(i + 1, j + 1) == Cell::Interior;
      if (!any_interior) continue;
      const double u00 = g.value(i, j), u10 = g.value(i + 1, j);
      const double u01 = g.value(i, j + 1), u11 = g.value(i + 1, j + 1);
      const double gx = (u10 + u11 - u00 - u01) / (2.0 * g.h);
      const double gy = (u01 + u11 - u00 - u10) / (2.0 * g.h);
      energy += (gx * gx + gy * gy) * g.h * g.h;
    }
  }
  return energy;
}

CapacityEstimate estimate_capacity(const Condenser& cond, int levels,
                                   double h_base) {
  if (levels < 2) throw std::domain_error("estimate_capacity: levels >= 2");
  CapacityEstimate est;
  double h = h_base;
  GridField prev;
  for (int l = 0; l < levels; ++l, h *= 0.5) {
    GridField g = build_grid(cond, h);
    if (l > 0) {
      // warm-start from the coarse solution
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          if (g.at(i, j) != Cell::Interior) continue;
          const cpx z = g.center(i, j);
          int ic = static_cast<int>((z.real() - prev.x0) / prev.h);
          int jc = static_cast<int>((z.imag() - prev.y0) / prev.h);
          ic = std::clamp(ic, 0, prev.nx - 1);
          jc = std::clamp(jc, 0, prev.ny - 1);
          g.u[static_cast<size_t>(j) * g.nx + i] = prev.value(ic, jc);
        }
      }
    }
    solve_potential(g);
    est.energies.push_back(dirichlet_energy(g));
    prev = std::move(g);
  }
  // first-order Richardson on successive levels
  std::vector<double> extrap;
  for (size_t l = 0; l + 1 < est.energies.size(); ++l)
    extrap.push_back(2.0 * est.energies[l + 1] - est.energies[l]);
  est.value = extrap.back();
  est.error_estimate = extrap.size() >= 2
                           ? std::abs(extrap.back() - extrap[extrap.size() - 2])
                           : std::abs(extrap.back() - est.energies.back());
  return est;
}

std::string dump_potential(const GridField& g) {
  std::string out;
  out.reserve(static_cast<size_t>(g.nx) * g.ny * 10);
  char buf[32];
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.6g", g.value(i, j));
      out += buf;
      out += (i + 1 < g.nx) ? ' ' : '\n';
    }
  }
  return out;
}

}  // namespace condcap::capsolve
