#include "hardycomp/gliding_hump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardycomp/parallel.hpp"
#include "hardycomp/rng.hpp"

namespace hardycomp {

namespace {

constexpr double kMinGap = 1e-151;   // below this |eta|^2 loses precision
constexpr double kMinEps = 1e-151;
constexpr double kMinUsableD = 1e-3;

/// Boundary map of the pre-rotated symbol plus a multiscale grid with cached
/// window sizes |1 - chi| per node. Masses of the composed test kernels are
/// plain weighted sums: |C_chi(g_a)|^p = gap(2-gap)/|gap + (1-gap) u|^2
/// for every p, where u = 1 - chi.
class HumpWorkspace {
 public:
  explicit HumpWorkspace(const Symbol& rotated) : bm_(rotated) {}

  void ensure_scale(double scale) {
    if (scale >= built_scale_) return;
    rebuild(scale * 1e-12);
  }

  void rebuild(double min_scale) {
    min_scale = std::max(min_scale, 1e-147);
    built_scale_ = min_scale;
    grid_ = HumpGrid::build(bm_.anchors(), min_scale);
    const std::size_t n = grid_.size();
    u_.resize(n);
    u_abs_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      u_[k] = value_of(bm_, grid_, grid_.nodes[k]);
      u_abs_[k] = std::abs(u_[k]);
    }
  }

  /// 1 - chi at a grid node; contact-free maps carry a pseudo-anchor the
  /// boundary map does not know about.
  static Complex value_of(const BoundaryMap& bm, const HumpGrid& grid,
                          const HumpNode& node) {
    if (bm.anchors().empty()) {
      return bm.one_minus(grid.anchors[node.anchor] + node.offset);
    }
    return bm.one_minus(node.anchor, node.offset);
  }

  /// Mass of the gap-sized kernel over {lo <= |1 - chi| < hi}.
  double mass(double gap, double lo, double hi) const {
    const double num = gap * (2.0 - gap);
    const double one_minus_gap = 1.0 - gap;
    double acc = 0.0;
    const std::size_t n = grid_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const double ua = u_abs_[k];
      if (ua < lo || ua >= hi) continue;
      const Complex eta = gap + one_minus_gap * u_[k];
      acc += grid_.weights[k] * num / std::norm(eta);
    }
    return acc;
  }

  double total_mass(double gap) const {
    return mass(gap, 0.0, std::numeric_limits<double>::infinity());
  }

  const HumpGrid& grid() const { return grid_; }
  const BoundaryMap& boundary() const { return bm_; }
  double built_scale() const { return built_scale_; }

 private:
  BoundaryMap bm_;
  HumpGrid grid_;
  std::vector<Complex> u_;
  std::vector<double> u_abs_;
  double built_scale_ = std::numeric_limits<double>::infinity();
};

HumpCertificate make_partial(HumpCertificate cert, int stage, std::string reason) {
  cert.complete = false;
  cert.failure_stage = stage;
  cert.failure_reason = std::move(reason);
  return cert;
}

}  // namespace

bool delta_admissible(double delta, double p) {
  if (delta <= 0.0) return false;
  return delta * std::pow(1.0 - std::pow(2.0, -p), 1.0 / p) < 0.25;
}

TestPointLadder select_test_points(const Symbol& phi, double p, double ray,
                                   int rungs) {
  if (p < 1.0) throw DomainError("test point selection requires p >= 1");
  if (rungs < 1 || rungs > 500) throw DomainError("rung count must lie in [1, 500]");

  HumpWorkspace ws(phi.rotated(-ray));
  ws.rebuild(std::ldexp(1.0, -rungs));

  TestPointLadder out;
  double min_norm = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= rungs; ++m) {
    const double gap = std::ldexp(1.0, -m);
    const double norm = std::pow(ws.total_mass(gap), 1.0 / p);
    min_norm = std::min(min_norm, norm);
    out.points.push_back({m, gap, ray});
  }
  out.d = 0.9 * min_norm;
  if (!(out.d >= kMinUsableD)) {
    throw DomainError("no usable lower bound; symbol may be compact");
  }
  return out;
}

HumpCertificate gliding_hump_select(const Symbol& phi, double p, double d,
                                    std::span<const RadialPoint> points,
                                    double delta, int target_k) {
  if (!delta_admissible(delta, p)) {
    throw DomainError("delta rule violated: need delta * (1-2^{-p})^{1/p} < 1/4");
  }
  if (d <= 0.0) throw DomainError("d must be positive");
  if (points.empty()) throw DomainError("no test points supplied");
  if (target_k < 1) throw DomainError("target_k must be positive");
  if (phi.is_constant()) throw DomainError("hump selection requires a non-constant symbol");

  const double ray = points.front().ray;
  HumpCertificate cert;
  cert.symbol_text = phi.text();
  cert.ray = ray;
  cert.p = p;
  cert.delta = delta;
  cert.d = d;
  cert.target_k = target_k;

  HumpWorkspace ws(phi.rotated(-ray));
  ws.rebuild(std::min(1.0, points.front().gap));

  const double large_bound = std::pow(0.5 * d, p);
  struct Pick {
    int index;
    double eps;
  };
  std::vector<Pick> picks;
  double eps_prev = std::numeric_limits<double>::infinity();
  int next_index = 0;

  for (int n = 1; n <= target_k; ++n) {
    const double small = std::pow(std::pow(4.0, -n) * delta * d, p);

    // Shrink the window until every earlier hump has mass below the stage
    // threshold inside it.
    double eps = 1.0;
    while (eps >= eps_prev) eps *= 0.5;
    for (;;) {
      ws.ensure_scale(eps);
      bool ok = true;
      for (const Pick& pk : picks) {
        if (ws.mass(points[pk.index].gap, 0.0, eps) >= small) {
          ok = false;
          break;
        }
      }
      if (ok) break;
      eps *= 0.5;
      if (eps < kMinEps) {
        return make_partial(std::move(cert), n, "window scale floor reached");
      }
    }

    // Advance the test point until the new hump concentrates inside.
    bool found = false;
    for (int idx = next_index; idx < static_cast<int>(points.size()); ++idx) {
      const double gap = points[idx].gap;
      if (gap < kMinGap) {
        return make_partial(std::move(cert), n, "test point scale floor reached");
      }
      ws.ensure_scale(std::min(gap, eps));
      const double outside = ws.mass(gap, eps, std::numeric_limits<double>::infinity());
      if (outside >= small) continue;
      const double inside = ws.mass(gap, 0.0, eps);
      if (inside <= large_bound) continue;
      picks.push_back({idx, eps});
      next_index = idx + 1;
      found = true;
      break;
    }
    if (!found) {
      return make_partial(std::move(cert), n, "test points exhausted");
    }
    eps_prev = eps;
  }

  // Freeze the grid at the deepest scale and recompute every recorded
  // quantity on it, so the stored numbers replay bit for bit.
  double final_scale = 1.0;
  for (const Pick& pk : picks) {
    final_scale = std::min({final_scale, points[pk.index].gap, pk.eps});
  }
  ws.rebuild(final_scale * 1e-12);
  cert.grid.anchors = ws.grid().anchors;
  cert.grid.min_scale = ws.built_scale();
  cert.grid.log_spacing = ws.grid().log_spacing;
  cert.grid.floor_offset = ws.grid().floor_offset;

  for (int n = 1; n <= target_k; ++n) {
    const Pick& pk = picks[n - 1];
    HumpStage st;
    st.rung = points[pk.index].rung;
    st.gap = points[pk.index].gap;
    st.eps = pk.eps;
    st.small_bound = std::pow(std::pow(4.0, -n) * delta * d, p);
    st.large_bound = large_bound;
    for (int k = 0; k < n - 1; ++k) {
      st.prior_mass.push_back(ws.mass(points[picks[k].index].gap, 0.0, pk.eps));
    }
    st.outside_mass =
        ws.mass(st.gap, pk.eps, std::numeric_limits<double>::infinity());
    st.inside_mass = ws.mass(st.gap, 0.0, pk.eps);
    cert.stages.push_back(std::move(st));
  }

  // The selection margins dwarf the regrid perturbation, but verify anyway.
  for (const HumpStage& st : cert.stages) {
    for (double m : st.prior_mass) {
      if (!(m < st.small_bound)) {
        return make_partial(std::move(cert), static_cast<int>(cert.stages.size()),
                            "final-grid reverification failed");
      }
    }
    if (!(st.outside_mass < st.small_bound) || !(st.inside_mass > st.large_bound)) {
      return make_partial(std::move(cert), static_cast<int>(cert.stages.size()),
                          "final-grid reverification failed");
    }
  }
  cert.complete = true;
  return cert;
}

SampleMatrix certificate_samples(const Symbol& phi, const HumpCertificate& cert) {
  HumpWorkspace ws(phi.rotated(-cert.ray));
  ws.rebuild(cert.grid.min_scale);

  const auto& live = ws.grid().anchors;
  if (live.size() != cert.grid.anchors.size()) {
    throw DomainError("certificate grid does not match the symbol (anchor count)");
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (std::abs(wrap_angle(live[i] - cert.grid.anchors[i])) > 1e-8) {
      throw DomainError("certificate grid does not match the symbol (anchor angle)");
    }
  }

  SampleMatrix m;
  m.weights = ws.grid().weights;
  const std::size_t n = ws.grid().size();
  const BoundaryMap& bm = ws.boundary();
  for (const HumpStage& st : cert.stages) {
    const double gap = st.gap;
    const double amp = std::pow(gap * (2.0 - gap), 1.0 / cert.p);
    std::vector<Complex> row(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex u = HumpWorkspace::value_of(bm, ws.grid(), ws.grid().nodes[k]);
      const Complex eta = gap + (1.0 - gap) * u;
      row[k] = amp * std::pow(eta, -2.0 / cert.p);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

double weighted_p_norm(const SampleMatrix& fns, std::span<const Complex> coeff,
                       double p) {
  const std::size_t n = fns.nodes();
  const int k = fns.count();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Complex sum = 0.0;
    for (int i = 0; i < k; ++i) sum += coeff[i] * fns.rows[i][j];
    acc += fns.weights[j] * std::pow(std::norm(sum), 0.5 * p);
  }
  return std::pow(acc, 1.0 / p);
}

double vector_p_norm(std::span<const Complex> coeff, double p) {
  double acc = 0.0;
  for (const Complex& c : coeff) acc += std::pow(std::norm(c), 0.5 * p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

FrameStats frame_bounds_verify(const SampleMatrix& fns, double p, int trials,
                               std::uint64_t seed, int threads) {
  if (fns.count() < 2) throw DomainError("frame verification needs at least two functions");
  if (trials < 1) throw DomainError("frame verification needs at least one trial");

  std::vector<double> ratio(trials, 0.0);
  parallel_for(trials, threads, [&](std::int64_t t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<Complex> b(fns.count());
    for (auto& c : b) c = rng.unit_disk();
    const double bnorm = vector_p_norm(b, p);
    if (bnorm < 1e-12) {
      ratio[t] = 1.0;  // degenerate draw, skip by reporting a neutral value
      return;
    }
    for (auto& c : b) c /= bnorm;
    ratio[t] = weighted_p_norm(fns, b, p);
  });

  FrameStats st;
  st.trials = trials;
  st.seed = seed;
  st.c1_hat = *std::min_element(ratio.begin(), ratio.end());
  st.c2_hat = *std::max_element(ratio.begin(), ratio.end());
  return st;
}

DiagnosticFit lp_vs_l2_diagnostic(const SampleMatrix& fns, double p, int trials,
                                  std::uint64_t seed) {
  if (fns.count() < 2) throw DomainError("diagnostic needs at least two functions");
  std::vector<double> y(trials), xp(trials), x2(trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<Complex> c(fns.count());
    for (auto& v : c) v = rng.gaussian();
    const double n2 = vector_p_norm(c, 2.0);
    for (auto& v : c) v /= n2;
    y[t] = weighted_p_norm(fns, c, p);
    xp[t] = vector_p_norm(c, p);
    x2[t] = vector_p_norm(c, 2.0);
  }
  auto residual = [&](std::span<const double> x) {
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (int t = 0; t < trials; ++t) {
      sxy += x[t] * y[t];
      sxx += x[t] * x[t];
      syy += y[t] * y[t];
    }
    const double lambda = sxy / sxx;
    double rss = 0.0;
    for (int t = 0; t < trials; ++t) {
      const double r = y[t] - lambda * x[t];
      rss += r * r;
    }
    return std::sqrt(rss / std::max(syy, 1e-300));
  };
  DiagnosticFit fit;
  fit.residual_lp = residual(xp);
  fit.residual_l2 = residual(x2);
  fit.trials = trials;
  fit.seed = seed;
  return fit;
}

std::vector<double> annulus_masses(const Symbol& phi, const HumpCertificate& cert,
                                   int j) {
  if (j < 0 || j >= static_cast<int>(cert.stages.size())) {
    throw DomainError("stage index out of range");
  }
  HumpWorkspace ws(phi.rotated(-cert.ray));
  ws.rebuild(cert.grid.min_scale);
  const double gap = cert.stages[j].gap;
  const int k = static_cast<int>(cert.stages.size());
  std::vector<double> rings;
  double upper = std::numeric_limits<double>::infinity();
  for (int n = 0; n < k; ++n) {
    rings.push_back(ws.mass(gap, cert.stages[n].eps, upper));
    upper = cert.stages[n].eps;
  }
  rings.push_back(ws.mass(gap, 0.0, upper));
  return rings;
}

double total_mass_on_grid(const Symbol& phi, const HumpCertificate& cert, int j) {
  if (j < 0 || j >= static_cast<int>(cert.stages.size())) {
    throw DomainError("stage index out of range");
  }
  HumpWorkspace ws(phi.rotated(-cert.ray));
  ws.rebuild(cert.grid.min_scale);
  return ws.total_mass(cert.stages[j].gap);
}

ReplayReport replay_certificate(const Symbol& phi, const HumpCertificate& cert) {
  ReplayReport rep;
  if (cert.stages.empty()) {
    rep.detail = "certificate has no stages";
    return rep;
  }
  HumpWorkspace ws(phi.rotated(-cert.ray));
  ws.rebuild(cert.grid.min_scale);

  double max_dev = 0.0;
  auto check = [&](double fresh, double stored) {
    const double dev = std::abs(fresh - stored) / std::max(1.0, std::abs(stored));
    max_dev = std::max(max_dev, dev);
  };

  for (std::size_t n = 0; n < cert.stages.size(); ++n) {
    const HumpStage& st = cert.stages[n];
    for (std::size_t k = 0; k < st.prior_mass.size(); ++k) {
      const double fresh = ws.mass(cert.stages[k].gap, 0.0, st.eps);
      check(fresh, st.prior_mass[k]);
      if (!(fresh < st.small_bound)) {
        rep.detail = "stage condition violated on replay";
        return rep;
      }
    }
    const double outside =
        ws.mass(st.gap, st.eps, std::numeric_limits<double>::infinity());
    const double inside = ws.mass(st.gap, 0.0, st.eps);
    check(outside, st.outside_mass);
    check(inside, st.inside_mass);
    if (!(outside < st.small_bound) || !(inside > st.large_bound)) {
      rep.detail = "stage condition violated on replay";
      return rep;
    }
  }
  rep.max_deviation = max_dev;
  rep.ok = max_dev <= 1e-10;
  if (!rep.ok) rep.detail = "stored masses deviate beyond 1e-10";
  return rep;
}

HumpCertificate run_hump_pipeline(const Symbol& phi, double p, double ray,
                                  double delta, int target_k, int rungs,
                                  int trials, std::uint64_t seed, int threads) {
  TestPointLadder ladder = select_test_points(phi, p, ray, rungs);
  HumpCertificate cert =
      gliding_hump_select(phi, p, ladder.d, ladder.points, delta, target_k);
  if (cert.complete && cert.stages.size() >= 2 && trials > 0) {
    const SampleMatrix samples = certificate_samples(phi, cert);
    cert.frame = frame_bounds_verify(samples, p, trials, seed, threads);
  }
  return cert;
}

}  // namespace hardycomp
