#include "hardycomp/contact.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace hardycomp {

std::string contact_verdict_name(ContactVerdict v) {
  switch (v) {
    case ContactVerdict::zero: return "zero";
    case ContactVerdict::positive: return "positive";
    case ContactVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_tau_ladder() {
  return {0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
}

namespace {

struct PowerFit {
  double m0 = 0.0, c = 0.0, alpha = 0.0, stderr_m0 = 0.0, rss = 1e300;
  bool ok = false;
};

// Least squares of y = m0 + C tau^alpha + D tau^{alpha+1} over a grid of
// alphas. The curvature term keeps the intercept unbiased when the level-set
// curve is only asymptotically a power law.
PowerFit fit_measure_curve(std::span<const double> tau, std::span<const double> y) {
  const int n = static_cast<int>(tau.size());
  PowerFit best;
  for (double alpha = 0.05; alpha <= 2.0 + 1e-9; alpha += 0.025) {
    Eigen::Matrix3d xtx = Eigen::Matrix3d::Zero();
    Eigen::Vector3d xty = Eigen::Vector3d::Zero();
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector3d row(1.0, std::pow(tau[i], alpha),
                                std::pow(tau[i], alpha + 1.0));
      xtx += row * row.transpose();
      xty += row * y[i];
    }
    const Eigen::FullPivLU<Eigen::Matrix3d> lu(xtx);
    if (!lu.isInvertible()) continue;
    const Eigen::Vector3d beta = lu.solve(xty);
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xa = std::pow(tau[i], alpha);
      const double r = y[i] - beta(0) - beta(1) * xa - beta(2) * xa * tau[i];
      rss += r * r;
    }
    if (rss < best.rss) {
      const int dof = std::max(1, n - 4);
      const double sigma2 = rss / dof;
      const double var_m0 = sigma2 * lu.inverse()(0, 0);
      best = {beta(0), beta(1), alpha, std::sqrt(std::max(0.0, var_m0)), rss, true};
    }
  }
  return best;
}

}  // namespace

ContactProfile contact_measure(const Symbol& phi, std::span<const double> tau_ladder,
                               const QuadratureGrid& grid) {
  if (tau_ladder.empty()) throw DomainError("tau ladder must be nonempty");
  for (std::size_t i = 1; i < tau_ladder.size(); ++i) {
    if (!(tau_ladder[i] < tau_ladder[i - 1])) {
      throw DomainError("tau ladder must decrease strictly");
    }
  }

  ContactProfile out;
  out.n_nodes = grid.n_nodes;
  out.theta.reserve(grid.n_nodes);
  out.modulus.reserve(grid.n_nodes);
  for (int j = 0; j < grid.n_nodes; ++j) {
    const double th = grid.node_angle(j);
    out.theta.push_back(th);
    out.modulus.push_back(std::abs(phi.boundary_trace(th)));
  }

  out.tau.assign(tau_ladder.begin(), tau_ladder.end());
  for (double tau : out.tau) {
    int count = 0;
    for (double m : out.modulus) {
      if (m >= 1.0 - tau) ++count;
    }
    out.measure.push_back(static_cast<double>(count) / grid.n_nodes);
  }

  const double floor2n = 2.0 / grid.n_nodes;
  const auto [ymin, ymax] = std::minmax_element(out.measure.begin(), out.measure.end());
  if (*ymax - *ymin < floor2n) {
    // Flat curve: the measure is resolved directly.
    out.m0 = out.measure.back();
    out.fit_c = 0.0;
    out.fit_alpha = 0.0;
    out.m0_stderr = 0.0;
    out.verdict = out.m0 < floor2n ? ContactVerdict::zero : ContactVerdict::positive;
    return out;
  }

  const PowerFit fit = fit_measure_curve(out.tau, out.measure);
  if (!fit.ok) {
    out.verdict = ContactVerdict::inconclusive;
    return out;
  }
  out.m0 = std::clamp(fit.m0, 0.0, 1.0);
  out.fit_c = fit.c;
  out.fit_alpha = fit.alpha;
  out.m0_stderr = fit.stderr_m0;
  out.verdict = out.m0 < std::max(3.0 * out.m0_stderr, floor2n)
                    ? ContactVerdict::zero
                    : ContactVerdict::positive;
  return out;
}

std::pair<double, double> mass_split(const Symbol& phi, Complex a, double p,
                                     double eps, const QuadratureGrid& grid) {
  if (p < 1.0) throw DomainError("mass_split requires p >= 1");
  if (eps <= 0.0) throw DomainError("mass_split requires eps > 0");
  const double gap = 1.0 - std::abs(a);
  if (gap <= 0.0) throw DomainError("test point must lie inside the disk");
  const int deg = std::max(1, phi.degree());
  const int n = pow2_at_least(64.0 * deg / std::max(gap, 1e-12), grid.n_nodes, 1 << 20);

  const double num = 1.0 - std::norm(a);
  const Complex ac = std::conj(a);
  double inside = 0.0, outside = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex w = phi.boundary_trace(kTwoPi * j / n);
    const double v = num / std::norm(1.0 - ac * w);
    if (std::abs(w - 1.0) < eps) {
      inside += v;
    } else {
      outside += v;
    }
  }
  return {inside / n, outside / n};
}

PullbackReport pullback_density(const Symbol& phi, int n_arcs,
                                const QuadratureGrid& grid, double delta) {
  if (n_arcs < 1) throw DomainError("pullback needs at least one arc");
  PullbackReport r;
  r.n_arcs = n_arcs;
  r.n_nodes = grid.n_nodes;
  r.nu.assign(n_arcs, 0.0);
  r.density.assign(n_arcs, 0.0);
  r.stderr_nu.assign(n_arcs, 0.0);
  r.in_f.assign(n_arcs, false);

  Symbol map = phi;
  const Complex at_zero = phi.is_constant() ? phi.constant_value()
                                            : phi.rational().eval(Complex(0.0));
  if (std::abs(at_zero) > 1e-14) {
    map = phi.recentered();
    r.recentered = true;
  }

  // Gate on the contact measure first: a null contact set cannot carry a
  // positive-density arc union. The gate runs at the measure-curve module's
  // own calibration; the histogram grid can be much finer.
  const auto ladder = default_tau_ladder();
  const ContactProfile profile =
      contact_measure(map, ladder, QuadratureGrid::uniform());
  if (profile.verdict != ContactVerdict::positive) {
    r.status = "contact set has measure zero (or undecided); F is empty";
    r.delta = delta > 0.0 ? delta : 0.0;
    return r;
  }

  int contact_nodes = 0;
  for (int j = 0; j < grid.n_nodes; ++j) {
    const Complex w = map.boundary_trace(grid.node_angle(j));
    if (std::abs(w) < 1.0 - r.tau_min) continue;
    ++contact_nodes;
    const double ang = wrap_positive(std::arg(w));
    int arc = static_cast<int>(ang / kTwoPi * n_arcs);
    arc = std::clamp(arc, 0, n_arcs - 1);
    r.nu[arc] += 1.0;
  }
  r.m_e_hat = static_cast<double>(contact_nodes) / grid.n_nodes;

  const double arc_measure = 1.0 / n_arcs;
  double max_density = 0.0;
  for (int k = 0; k < n_arcs; ++k) {
    r.nu[k] /= grid.n_nodes;
    r.density[k] = r.nu[k] / arc_measure;
    r.stderr_nu[k] = std::sqrt(std::max(0.0, r.nu[k] * (1.0 - r.nu[k]) / grid.n_nodes));
    max_density = std::max(max_density, r.density[k]);
  }
  r.delta = delta > 0.0 ? delta : 0.5 * max_density;
  for (int k = 0; k < n_arcs; ++k) r.in_f[k] = r.density[k] >= r.delta;
  return r;
}

LowerBoundCheck pullback_lower_bound_check(const Symbol& phi,
                                           const std::function<Complex(double)>& f,
                                           double p, const PullbackReport& report,
                                           const QuadratureGrid& grid) {
  if (p < 1.0) throw DomainError("lower bound check requires p >= 1");
  if (report.n_arcs < 1) throw DomainError("report carries no arc partition");

  Symbol map = report.recentered ? phi.recentered() : phi;

  auto arc_of = [&](double ang) {
    int arc = static_cast<int>(wrap_positive(ang) / kTwoPi * report.n_arcs);
    return std::clamp(arc, 0, report.n_arcs - 1);
  };

  // Support check: f must vanish on grid nodes outside F.
  double sup_f = 0.0;
  for (int j = 0; j < grid.n_nodes; ++j) {
    const double th = grid.node_angle(j);
    const double mag = std::abs(f(th));
    sup_f = std::max(sup_f, mag);
    if (mag > 0.0 && !report.in_f[arc_of(th)]) {
      throw DomainError("support leakage: f is nonzero outside F");
    }
  }

  LowerBoundCheck chk;
  double lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < grid.n_nodes; ++j) {
    const double th = grid.node_angle(j);
    const Complex w = map.boundary_trace(th);
    if (std::abs(w) >= 1.0 - report.tau_min) {
      lhs += std::pow(std::abs(f(std::arg(w))), p);
    }
    if (report.in_f[arc_of(th)]) {
      rhs += std::pow(std::abs(f(th)), p);
    }
  }
  chk.lhs = lhs / grid.n_nodes;
  chk.rhs = report.delta * rhs / grid.n_nodes;
  chk.tol = 3.0 * std::pow(sup_f, p) / std::sqrt(static_cast<double>(grid.n_nodes));
  chk.pass = chk.lhs >= chk.rhs - chk.tol;
  return chk;
}

double harmonic_measure_arc(Complex z, double arc_start, double arc_length) {
  if (arc_length <= 0.0) return 0.0;
  if (arc_length >= kTwoPi) return 1.0;
  if (std::abs(z) >= 1.0) throw DomainError("harmonic measure needs an interior point");
  const auto image_angle = [&](double t) {
    const Complex xi = unit_at(t);
    return std::arg((xi - z) / (1.0 - std::conj(z) * xi));
  };
  const double a = image_angle(arc_start);
  const double b = image_angle(arc_start + arc_length);
  double len = b - a;
  if (len <= 0.0) len += kTwoPi;
  return len / kTwoPi;
}

double poisson_extension(std::span<const double> boundary_values,
                         const QuadratureGrid& grid, Complex z) {
  if (static_cast<int>(boundary_values.size()) != grid.n_nodes) {
    throw DomainError("boundary sample count does not match the grid");
  }
  const double num = 1.0 - std::norm(z);
  double acc = 0.0;
  for (int j = 0; j < grid.n_nodes; ++j) {
    acc += boundary_values[j] * num / std::norm(unit_at(grid.node_angle(j)) - z);
  }
  return acc / grid.n_nodes;
}

}  // namespace hardycomp
