// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bilayer::kernels {

// Additive reductions accumulate fixed-size blocks in index order, so the
// result is independent of the OpenMP thread count and bit-identical between
// serial and parallel execution. Elementwise kernels write each index once
// and are trivially deterministic.
inline constexpr std::size_t reduction_block = 4096;

// Loops shorter than this stay serial; fork/join overhead dominates below it.
inline constexpr std::size_t parallel_grain = std::size_t{1} << 15;

/// Deterministic blocked sum of body(0), ..., body(n-1).
template <class Body>
double indexed_sum(std::size_t n, const Body& body) {
  if (n == 0) return 0.0;
  const std::size_t nb = (n + reduction_block - 1) / reduction_block;
  if (nb == 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += body(i);
    return s;
  }
  std::vector<double> partial(nb);
#pragma omp parallel for schedule(static) if (n >= parallel_grain)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    const std::size_t hi = lo + reduction_block < n ? lo + reduction_block : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += body(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

bool all_finite(std::span<const double> u);
double sum(std::span<const double> u);
double dot(std::span<const double> u, std::span<const double> v);
double min_value(std::span<const double> u);
double max_value(std::span<const double> u);

// Face arrays carry n_cells + 1 entries; entries 0 and n are the boundary
// faces and are always written as zero (no flux through the boundary).

/// mob[k] = max(0, (u[k-1] + u[k]) / 2 - shift) on interior faces.
void face_mobility(std::span<const double> u, double shift,
                   std::span<double> mob);

/// flux[k] = inv_dx * (c_a * mob_a[k] * (a[k] - a[k-1])
///                   + c_b * mob_b[k] * (b[k] - b[k-1])) on interior faces.
void face_flux(std::span<const double> a, std::span<const double> b,
               std::span<const double> mob_a, std::span<const double> mob_b,
               double c_a, double c_b, double inv_dx, std::span<double> flux);

/// out[i] = inv_dx * (flux[i+1] - flux[i]).
void divergence(std::span<const double> flux, double inv_dx,
                std::span<double> out);

/// max over faces of c1 * mob1[k] + c2 * mob2[k] (0 if there are no faces).
double max_mobility_sum(std::span<const double> mob1,
                        std::span<const double> mob2, double c1, double c2);

/// Sum over interior faces of (u[k] - u[k-1])^2.
double face_diff_sq_sum(std::span<const double> u);

struct UpdateExtrema {
  double min_after;
  double max_after;
};

/// u[i] += dt * d[i]; returns the post-update extrema.
UpdateExtrema euler_update(std::span<double> u, std::span<const double> d,
                           double dt);

/// Zeroes every negative entry; returns the sum of the zeroed magnitudes.
double zero_negatives(std::span<double> u);

// Serial reference implementations: straightforward loops, left-to-right
// accumulation. The test suite checks the OpenMP kernels against these and
// the benchmark target compares their throughput.
namespace ref {

bool all_finite(std::span<const double> u);
double sum(std::span<const double> u);
double dot(std::span<const double> u, std::span<const double> v);
double min_value(std::span<const double> u);
double max_value(std::span<const double> u);
void face_mobility(std::span<const double> u, double shift,
                   std::span<double> mob);
void face_flux(std::span<const double> a, std::span<const double> b,
               std::span<const double> mob_a, std::span<const double> mob_b,
               double c_a, double c_b, double inv_dx, std::span<double> flux);
void divergence(std::span<const double> flux, double inv_dx,
                std::span<double> out);
double max_mobility_sum(std::span<const double> mob1,
                        std::span<const double> mob2, double c1, double c2);
double face_diff_sq_sum(std::span<const double> u);
UpdateExtrema euler_update(std::span<double> u, std::span<const double> d,
                           double dt);
double zero_negatives(std::span<double> u);

}  // namespace ref

}  // namespace bilayer::kernels
