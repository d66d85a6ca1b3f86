// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace bilayer {

// Absolute tolerance for nonnegativity checks. Explicit schemes track the
// continuous maximum principle only up to truncation error.
inline constexpr double tol_barrier = 1e-10;

/// Uniform cell-centered mesh on (0, length) with no-flux boundary faces.
struct Grid {
  int n_cells = 0;
  double length = 0.0;
  double dx = 0.0;
  std::vector<double> cell_centers;  // x_i = (i + 1/2) * dx
};

/// Builds a uniform grid. Rejects n_cells < 2 and non-finite or
/// non-positive lengths.
Grid build_grid(int n_cells, double length);

/// dx * sum(u): midpoint quadrature of the integral over (0, length).
/// For nonnegative data this is the discrete L1 norm.
double discrete_mass(std::span<const double> u, const Grid& grid);

/// Physical and regularisation constants. epsilon = 0 selects the
/// degenerate system.
struct Params {
  double R = 1.0;
  double R_mu = 1.0;
  double epsilon = 0.0;

  void validate() const;  // R > 0, R_mu > 0, epsilon in [0, 1)
};

/// Cell averages of the two layer thicknesses at one time instant.
/// The total height h = f + g is derived on demand, never stored.
struct State {
  std::vector<double> f;
  std::vector<double> g;
  double time = 0.0;
};

/// Rejects wrong sizes, non-finite entries, negative entries below
/// -tol_barrier and negative time.
void validate_state(const State& state, const Grid& grid);

/// Per-sample bundle of conserved quantities, energies, dissipation-rate
/// integrands and distances to the flat equilibrium.
struct DiagnosticsRecord {
  double time = 0.0;
  double mass_f = 0.0;
  double mass_g = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double d1_rate = 0.0;
  double d2_rate = 0.0;
  double min_f = 0.0;
  double min_g = 0.0;
  double clamp_mass_cum = 0.0;
  double dist2_f = 0.0;
  double dist2_g = 0.0;
  double grad_f_l2 = 0.0;
  double grad_g_l2 = 0.0;
};

}  // namespace bilayer
