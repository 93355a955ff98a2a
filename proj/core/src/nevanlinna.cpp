#include "hardycomp/nevanlinna.hpp"

#include <algorithm>
#include <cmath>

#include "hardycomp/boundary_map.hpp"
#include "hardycomp/parallel.hpp"
#include "hardycomp/roots.hpp"

namespace hardycomp {

namespace {

constexpr int kDegreeCap = 64;
constexpr double kBoundaryExclusion = 1e-12;
constexpr double kClusterRadius = 1e-7;
constexpr double kResidualTol = 1e-9;

}  // namespace

std::vector<Preimage> preimages(const Symbol& phi, Complex w) {
  if (std::abs(w) >= 1.0) throw DomainError("preimage target must lie inside the disk");
  const Complex at_zero = phi.is_constant() ? phi.constant_value() : phi.rational().eval(Complex(0.0));
  if (std::abs(w - at_zero) < 1e-12) {
    throw DomainError("counting function excluded at w = phi(0)");
  }
  if (phi.is_constant()) return {};

  const RationalFn& r = phi.rational();
  Poly eq = poly_sub(r.num, poly_scale(r.den, w));
  poly_trim(eq);
  if (poly_degree(eq) > kDegreeCap) {
    throw DomainError("degree overflow: cleared polynomial degree exceeds 64");
  }

  std::vector<Complex> raw = poly_roots(eq);
  std::vector<Complex> kept;
  for (Complex z : raw) {
    if (std::abs(z) >= 1.0 - kBoundaryExclusion) continue;
    if (std::abs(phi.eval(z) - w) > kResidualTol) {
      throw NumericError("root polish failed to meet the residual tolerance");
    }
    kept.push_back(z);
  }
  std::vector<Preimage> out;
  for (const RootCluster& c : cluster_roots(std::move(kept), kClusterRadius)) {
    out.push_back({c.center, c.multiplicity});
  }
  return out;
}

double counting(const Symbol& phi, Complex w) {
  double sum = 0.0;
  for (const Preimage& pre : preimages(phi, w)) {
    sum += pre.multiplicity * std::log(1.0 / std::abs(pre.z));
  }
  return sum;
}

double counting_ratio(const Symbol& phi, Complex w) {
  return counting(phi, w) / std::log(1.0 / std::abs(w));
}

ShapiroTrend shapiro_trend(const Symbol& phi, int n_rays, int m_lo, int m_hi,
                           int threads) {
  if (n_rays < 1 || m_lo > m_hi) throw DomainError("bad trend scan parameters");
  ShapiroTrend t;
  for (int m = m_lo; m <= m_hi; ++m) t.rungs.push_back(m);
  for (int i = 0; i < n_rays; ++i) t.ray_angles.push_back(kTwoPi * i / n_rays);
  // A uniform fan misses the concentration direction of a generic map once
  // the rungs are deep; aim extra rays at the boundary contact values.
  for (double a : contact_value_angles(phi)) {
    bool dup = false;
    for (double b : t.ray_angles) {
      if (std::abs(wrap_angle(a - b)) < 1e-12) dup = true;
    }
    if (!dup) t.ray_angles.push_back(a);
  }
  const int total_rays = static_cast<int>(t.ray_angles.size());
  t.ratios.assign(total_rays, std::vector<double>(t.rungs.size(), 0.0));

  parallel_for(total_rays, threads, [&](std::int64_t i) {
    const Complex dir = unit_at(t.ray_angles[i]);
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      const Complex w = (1.0 - std::ldexp(1.0, -t.rungs[k])) * dir;
      double ratio = 0.0;
      try {
        ratio = counting_ratio(phi, w);
      } catch (const DomainError&) {
        // w collided with phi(0); skip the sample (a single point).
        ratio = 0.0;
      }
      t.ratios[i][k] = ratio;
    }
  });

  t.rung_max.assign(t.rungs.size(), 0.0);
  for (int i = 0; i < total_rays; ++i) {
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      t.rung_max[k] = std::max(t.rung_max[k], t.ratios[i][k]);
    }
  }
  t.verdict = assess_trend(t.rung_max.front(), t.rung_max.back(), m_hi);
  t.limit_guess = aitken_limit(t.rung_max);
  t.heuristic = true;
  return t;
}

}  // namespace hardycomp
