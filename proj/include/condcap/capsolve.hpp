#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

// Desk-scale variational capacity oracle: Dirichlet energy minimization of
// the 5-point Laplacian on a masked uniform grid, with Richardson
// extrapolation over grid refinement.

namespace condcap::capsolve {

using cpx = std::complex<double>;

enum class Cell : std::uint8_t { Interior, Dirichlet0, Dirichlet1, Outside };

struct GridField {
  int nx = 0, ny = 0;
  double h = 0.0;
  double x0 = 0.0, y0 = 0.0;  // cell (i,j) center: (x0 + (i+1/2)h, y0 + (j+1/2)h)
  std::vector<Cell> mask;
  std::vector<double> u;

  Cell at(int i, int j) const { return mask[static_cast<size_t>(j) * nx + i]; }
  double value(int i, int j) const;
  cpx center(int i, int j) const {
    return cpx(x0 + (i + 0.5) * h, y0 + (j + 0.5) * h);
  }
};

// Condenser (G, E): outer boundary of G (counterclockwise polyline; empty
// means the unit circle) and the compact set E given as closed loops
// and/or slit segments (fattened to one cell during masking).
struct Condenser {
  std::vector<cpx> outer;                        // empty => unit disk
  std::vector<std::vector<cpx>> inner_loops;     // closed polylines
  std::vector<std::array<cpx, 2>> inner_slits;   // segments
  double pad = 0.05;                             // box margin beyond G
};

Condenser annulus_condenser(double a);  // E = {|z| <= a} in the unit disk

// Masks cell centers/corners against the condenser geometry. Throws when
// the inner set is empty or the inner/outer gap spans fewer than 4 cells.
GridField build_grid(const Condenser& cond, double h);

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;
};

// Jacobi-preconditioned conjugate gradients on the interior unknowns.
SolveStats solve_potential(GridField& grid, double tol = 1e-10,
                           int max_iter = 200000);

// Dirichlet energy by bilinear gradients on the dual cells.
double dirichlet_energy(const GridField& grid);

struct CapacityEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  std::vector<double> energies;  // per refinement level
};

// Solve at h, h/2 (and h/4 when levels = 3) and Richardson-extrapolate
// assuming first-order boundary error.
CapacityEstimate estimate_capacity(const Condenser& cond, int levels,
                                   double h_base);

// Plain-text dump of u (one row per grid line) for external plotting.
std::string dump_potential(const GridField& grid);

}  // namespace condcap::capsolve
