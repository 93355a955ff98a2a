#pragma once

#include <vector>

#include "hardycomp/quadrature.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

struct Preimage {
  Complex z;
  int multiplicity;
};

/// All solutions of phi(z) = w inside the disk, found by companion-matrix
/// rootfinding on the cleared-numerator polynomial, Newton-polished, with
/// multiplicities from root clustering.
std::vector<Preimage> preimages(const Symbol& phi, Complex w);

/// Sum of multiplicity * log(1/|z|) over the preimages of w; 0 when empty.
double counting(const Symbol& phi, Complex w);

/// counting(phi, w) / log(1/|w|).
double counting_ratio(const Symbol& phi, Complex w);

struct ShapiroTrend {
  std::vector<int> rungs;        // |w| = 1 - 2^{-m}
  std::vector<double> ray_angles;
  std::vector<std::vector<double>> ratios;  // [ray][rung]
  std::vector<double> rung_max;
  Trend verdict = Trend::inconclusive;
  double limit_guess = 0.0;      // geometric extrapolation of rung maxima
  bool heuristic = true;         // the limit guess is not certified
};

/// Counting-function ratio scan toward the boundary along uniform rays.
ShapiroTrend shapiro_trend(const Symbol& phi, int n_rays = 128, int m_lo = 4,
                           int m_hi = 14, int threads = 1);

}  // namespace hardycomp
