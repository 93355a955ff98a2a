#pragma once

// Test-side oracles, independent of the library's solver paths.

#include <cmath>
#include <vector>

#include "hardycomp/polynomial.hpp"
#include "hardycomp/roots.hpp"
#include "hardycomp/rng.hpp"
#include "hardycomp/symbol.hpp"

namespace oracles {

using hardycomp::Complex;
using hardycomp::Poly;

// All roots by grid-scan + Newton with synthetic deflation: pick the grid
// point where the (deflated) polynomial is smallest, iterate Newton there,
// polish on the original coefficients, deflate, repeat. No eigenvalue
// machinery anywhere.
inline std::vector<Complex> brute_poly_roots(const Poly& coeffs) {
  Poly work = coeffs;
  hardycomp::poly_trim(work, 5e-15);
  const Poly orig = work;
  const Poly dorig = hardycomp::poly_derivative(orig);
  std::vector<Complex> out;

  while (hardycomp::poly_degree(work) >= 1) {
    Complex start{0.0, 0.0};
    double best = 1e300;
    for (int ir = 0; ir < 26; ++ir) {
      const double r = 0.02 + 1.25 * ir / 25.0;
      for (int it = 0; it < 48; ++it) {
        const Complex z = r * hardycomp::unit_at(hardycomp::kTwoPi * it / 48.0);
        const double v = std::abs(hardycomp::poly_eval(work, z));
        if (v < best) {
          best = v;
          start = z;
        }
      }
    }
    const Poly dwork = hardycomp::poly_derivative(work);
    Complex z = start;
    for (int iter = 0; iter < 400; ++iter) {
      const Complex f = hardycomp::poly_eval(work, z);
      const Complex df = hardycomp::poly_eval(dwork, z);
      if (std::abs(df) == 0.0) break;
      const Complex step = f / df;
      z -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) break;
    }
    for (int iter = 0; iter < 4; ++iter) {
      const Complex f = hardycomp::poly_eval(orig, z);
      const Complex df = hardycomp::poly_eval(dorig, z);
      if (std::abs(df) == 0.0) break;
      z -= f / df;
    }
    out.push_back(z);
    work = hardycomp::poly_deflate(work, z);
  }
  return out;
}

// Counting value from the brute roots: same filtering and clustering rules
// as the library contract.
inline double brute_counting(const hardycomp::Symbol& phi, Complex w) {
  const auto& rat = phi.rational();
  Poly eq = hardycomp::poly_sub(rat.num, hardycomp::poly_scale(rat.den, w));
  std::vector<Complex> kept;
  for (Complex z : brute_poly_roots(eq)) {
    if (std::abs(z) >= 1.0 - 1e-12) continue;
    if (std::abs(phi.eval(z) - w) > 1e-6) continue;
    kept.push_back(z);
  }
  double sum = 0.0;
  for (const auto& c : hardycomp::cluster_roots(std::move(kept), 1e-7)) {
    sum += c.multiplicity * std::log(1.0 / std::abs(c.center));
  }
  return sum;
}

// Random polynomial self-map of degree <= max_deg: Gaussian coefficients
// scaled so the coefficient-sum bound keeps the image inside 0.95 D.
inline hardycomp::Symbol random_poly_self_map(hardycomp::Rng& rng, int max_deg) {
  for (;;) {
    const int deg = 1 + static_cast<int>(rng.uniform() * max_deg);
    std::vector<Complex> c(deg + 1);
    double sum = 0.0;
    for (auto& v : c) {
      v = rng.gaussian();
      sum += std::abs(v);
    }
    if (sum < 1e-6 || std::abs(c[deg]) < 1e-3 * sum) continue;
    for (auto& v : c) v *= 0.95 / sum;
    return hardycomp::Symbol::poly(std::move(c));
  }
}

}  // namespace oracles
