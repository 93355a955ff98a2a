#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hardycomp/quadrature.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

using BoundaryFn = std::function<Complex(Complex)>;

/// ((1/n) sum |f_j|^p)^{1/p} over already-sampled values.
double hp_norm_samples(std::span<const Complex> samples, double p);

/// Circle means (mean of |f(r xi)|^p) for each ladder radius.
std::vector<double> circle_means(const BoundaryFn& f, double p,
                                 const QuadratureGrid& grid);

/// H^p norm by boundary quadrature: the r = 1 circle when the integrand has a
/// boundary trace (closed_disk), otherwise the max over the radius ladder.
double hp_norm(const BoundaryFn& f, double p, const QuadratureGrid& grid,
               bool closed_disk = true);

/// Normalized kernel-type test function concentrating at `a`:
///   g_a(z) = (1-|a|^2)^{1/p} / (1 - conj(a) z)^{2/p},  ||g_a||_p = 1.
struct TestFunction {
  Complex a;
  double p = 2.0;

  Complex operator()(Complex z) const;
  /// |g_a(z)|^p = (1-|a|^2)/|1 - conj(a) z|^2 for every p.
  double abs_p(Complex z) const;
};

struct CompositionMass {
  double mass = 0.0;               // integral of |g_a(phi)|^p over T
  double excluded_fraction = 0.0;  // nodes without a detected radial limit
};

/// Integral of |g_a(phi)|^p dm by boundary quadrature; the grid is refined
/// with the concentration scale 1-|a| so the kernel peak stays resolved.
CompositionMass composed_test_mass(const Symbol& phi, Complex a, double p,
                                   const QuadratureGrid& grid);

/// ||C_phi(g_a)||_p.
double composed_test_norm(const Symbol& phi, Complex a, double p,
                          const QuadratureGrid& grid);

struct CompactnessTrend {
  double p = 2.0;
  int base_nodes = 0;
  std::vector<double> ray_angles;
  std::vector<int> rungs;                   // |a| = 1 - 2^{-m}
  std::vector<std::vector<double>> scores;  // [ray][rung] norms
  std::vector<double> per_ray_max;
  std::vector<double> rung_max;             // max norm per rung
  Trend verdict = Trend::inconclusive;

  /// Ray whose final-rung score is largest (test-point direction).
  double best_ray() const;
};

/// Test-function compactness scan: ||C_phi(g_a)||_p along rays approaching
/// the boundary. The verdict compares the p-th-power masses rung to rung.
CompactnessTrend compactness_score(const Symbol& phi, double p,
                                   int n_rays = 64, int m_lo = 1, int m_hi = 12,
                                   const QuadratureGrid& grid = QuadratureGrid::uniform(),
                                   int threads = 1);

}  // namespace hardycomp
