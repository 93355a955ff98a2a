#include "hardycomp/hardy.hpp"

#include <algorithm>
#include <cmath>

#include "hardycomp/boundary_map.hpp"
#include "hardycomp/parallel.hpp"

namespace hardycomp {

double hp_norm_samples(std::span<const Complex> samples, double p) {
  if (p < 1.0) throw DomainError("hp_norm requires p >= 1");
  if (samples.empty()) throw DomainError("hp_norm needs at least one sample");
  double acc = 0.0;
  for (const Complex& v : samples) {
    const double m2 = std::norm(v);
    if (!std::isfinite(m2)) throw NumericError("malformed input: non-finite sample");
    acc += std::pow(m2, 0.5 * p);
  }
  return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

std::vector<double> circle_means(const BoundaryFn& f, double p,
                                 const QuadratureGrid& grid) {
  std::vector<double> means;
  means.reserve(grid.radius_ladder.size());
  for (double r : grid.radius_ladder) {
    double acc = 0.0;
    for (int j = 0; j < grid.n_nodes; ++j) {
      const double m2 = std::norm(f(r * unit_at(grid.node_angle(j))));
      if (!std::isfinite(m2)) throw NumericError("malformed input: non-finite sample");
      acc += std::pow(m2, 0.5 * p);
    }
    means.push_back(acc / grid.n_nodes);
  }
  return means;
}

double hp_norm(const BoundaryFn& f, double p, const QuadratureGrid& grid,
               bool closed_disk) {
  if (p < 1.0) throw DomainError("hp_norm requires p >= 1");
  if (closed_disk) {
    double acc = 0.0;
    for (int j = 0; j < grid.n_nodes; ++j) {
      const double m2 = std::norm(f(unit_at(grid.node_angle(j))));
      if (!std::isfinite(m2)) throw NumericError("malformed input: non-finite sample");
      acc += std::pow(m2, 0.5 * p);
    }
    return std::pow(acc / grid.n_nodes, 1.0 / p);
  }
  const auto means = circle_means(f, p, grid);
  double top = 0.0;
  for (double m : means) top = std::max(top, m);
  return std::pow(top, 1.0 / p);
}

Complex TestFunction::operator()(Complex z) const {
  const double g = 1.0 - std::norm(a);
  return std::pow(Complex(g), 1.0 / p) * std::pow(1.0 - std::conj(a) * z, -2.0 / p);
}

double TestFunction::abs_p(Complex z) const {
  return (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z);
}

CompositionMass composed_test_mass(const Symbol& phi, Complex a, double p,
                                   const QuadratureGrid& grid) {
  if (p < 1.0) throw DomainError("composed_test_mass requires p >= 1");
  if (std::abs(a) >= 1.0) throw DomainError("test point must lie inside the disk");

  const double gap = 1.0 - std::abs(a);
  const int deg = std::max(1, phi.degree());
  const int n = pow2_at_least(64.0 * deg / std::max(gap, 1e-12), grid.n_nodes, 1 << 20);

  const double num = 1.0 - std::norm(a);
  const Complex ac = std::conj(a);
  CompositionMass out;

  if (phi.holomorphic_on_closed_disk()) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex w = phi.boundary_trace(kTwoPi * j / n);
      acc += num / std::norm(1.0 - ac * w);
    }
    out.mass = acc / n;
    return out;
  }

  int excluded = 0;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    try {
      const Complex w = phi.boundary_trace(kTwoPi * j / n, grid.radius_ladder);
      acc += num / std::norm(1.0 - ac * w);
    } catch (const NumericError&) {
      ++excluded;
    }
  }
  out.excluded_fraction = static_cast<double>(excluded) / n;
  if (out.excluded_fraction >= 1e-3) {
    throw NumericError("radial limits undetected on more than 0.1% of nodes");
  }
  out.mass = acc / (n - excluded);
  return out;
}

double composed_test_norm(const Symbol& phi, Complex a, double p,
                          const QuadratureGrid& grid) {
  return std::pow(composed_test_mass(phi, a, p, grid).mass, 1.0 / p);
}

double CompactnessTrend::best_ray() const {
  double best = 0.0, best_score = -1.0;
  for (std::size_t i = 0; i < ray_angles.size(); ++i) {
    if (scores[i].empty()) continue;
    const double s = scores[i].back();
    if (s > best_score) {
      best_score = s;
      best = ray_angles[i];
    }
  }
  return best;
}

CompactnessTrend compactness_score(const Symbol& phi, double p, int n_rays,
                                   int m_lo, int m_hi, const QuadratureGrid& grid,
                                   int threads) {
  if (n_rays < 1 || m_lo > m_hi) throw DomainError("bad compactness scan parameters");
  CompactnessTrend t;
  t.p = p;
  t.base_nodes = grid.n_nodes;
  for (int i = 0; i < n_rays; ++i) t.ray_angles.push_back(kTwoPi * i / n_rays);
  // Aim extra rays at the boundary contact values, so the scan holds onto
  // the concentration direction of rotated maps at deep rungs.
  for (double a : contact_value_angles(phi)) {
    bool dup = false;
    for (double b : t.ray_angles) {
      if (std::abs(wrap_angle(a - b)) < 1e-12) dup = true;
    }
    if (!dup) t.ray_angles.push_back(a);
  }
  const int total_rays = static_cast<int>(t.ray_angles.size());
  for (int m = m_lo; m <= m_hi; ++m) t.rungs.push_back(m);
  t.scores.assign(total_rays, std::vector<double>(t.rungs.size(), 0.0));

  parallel_for(total_rays, threads, [&](std::int64_t i) {
    const Complex dir = unit_at(t.ray_angles[i]);
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      const double radius = 1.0 - std::ldexp(1.0, -t.rungs[k]);
      const double mass = composed_test_mass(phi, radius * dir, p, grid).mass;
      t.scores[i][k] = std::pow(mass, 1.0 / p);
    }
  });

  t.per_ray_max.assign(total_rays, 0.0);
  t.rung_max.assign(t.rungs.size(), 0.0);
  for (int i = 0; i < total_rays; ++i) {
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      t.per_ray_max[i] = std::max(t.per_ray_max[i], t.scores[i][k]);
      t.rung_max[k] = std::max(t.rung_max[k], t.scores[i][k]);
    }
  }
  // Verdict on the p-th power masses: those decay at the full exponential
  // rate for every p when the scores vanish, so one policy fits all p.
  const double first_mass = std::pow(t.rung_max.front(), p);
  const double final_mass = std::pow(t.rung_max.back(), p);
  t.verdict = assess_trend(first_mass, final_mass, m_hi);
  return t;
}

}  // namespace hardycomp
