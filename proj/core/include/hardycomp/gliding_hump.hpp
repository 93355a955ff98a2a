#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardycomp/boundary_map.hpp"
#include "hardycomp/quadrature.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

/// Boundary test point kept by its distance to the circle; the selection
/// descends to gaps far below the spacing representable next to 1.
struct RadialPoint {
  int rung = 0;      // gap = 2^{-rung}
  double gap = 0.0;  // 1 - |a|
  double ray = 0.0;  // angle of a

  Complex value() const { return (1.0 - gap) * unit_at(ray); }
};

struct TestPointLadder {
  double d = 0.0;  // uniform lower bound for the composed test norms
  std::vector<RadialPoint> points;
};

/// Test points a_m = (1 - 2^{-m}) e^{i ray}, m = 1..rungs, and
/// d = 0.9 * min_m ||C_phi(g_{a_m})||_p. Throws when d falls below 1e-3.
TestPointLadder select_test_points(const Symbol& phi, double p, double ray,
                                   int rungs);

/// One selected hump: test point, window size, and the recorded masses that
/// witness the three stage conditions.
struct HumpStage {
  int rung = 0;
  double gap = 0.0;
  double eps = 0.0;
  std::vector<double> prior_mass;  // earlier humps inside the new window (< small_bound)
  double outside_mass = 0.0;       // this hump outside its window (< small_bound)
  double inside_mass = 0.0;        // this hump inside its window (> large_bound)
  double small_bound = 0.0;        // (4^{-n} delta d)^p
  double large_bound = 0.0;        // (d/2)^p
};

struct HumpGridSpec {
  std::vector<double> anchors;
  double min_scale = 1.0;
  double log_spacing = 0.025;
  double floor_offset = 0.0;
};

struct FrameStats {
  int trials = 0;
  std::uint64_t seed = 0;
  double c1_hat = 0.0;
  double c2_hat = 0.0;
};

struct HumpCertificate {
  std::string symbol_text;
  double ray = 0.0;
  double p = 1.0;
  double delta = 0.1;
  double d = 0.0;
  int target_k = 6;
  bool complete = false;
  int failure_stage = 0;  // 0 when complete
  std::string failure_reason;
  std::vector<HumpStage> stages;
  HumpGridSpec grid;
  std::optional<FrameStats> frame;
};

/// max admissible scale for delta at this p: delta * (1-2^{-p})^{1/p} < 1/4.
bool delta_admissible(double delta, double p);

/// Inductive hump selection: shrink the window until every earlier hump has
/// small mass inside it, then advance the test point until the new hump sits
/// almost entirely inside with mass above (d/2)^p. Exhaustion produces a
/// partial certificate with the failing stage recorded.
HumpCertificate gliding_hump_select(const Symbol& phi, double p, double d,
                                    std::span<const RadialPoint> points,
                                    double delta, int target_k = 6);

/// Function family sampled on a weighted boundary grid.
struct SampleMatrix {
  std::vector<std::vector<Complex>> rows;  // [function][node]
  std::vector<double> weights;

  int count() const { return static_cast<int>(rows.size()); }
  std::size_t nodes() const { return weights.size(); }
};

/// The certificate's composed test functions sampled on its own grid.
SampleMatrix certificate_samples(const Symbol& phi, const HumpCertificate& cert);

/// Empirical two-sided frame constants over random coefficient vectors
/// (components uniform on the unit disk, normalized in l^p).
FrameStats frame_bounds_verify(const SampleMatrix& fns, double p, int trials,
                               std::uint64_t seed, int threads = 1);

struct DiagnosticFit {
  double residual_lp = 0.0;
  double residual_l2 = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Regresses ||sum c_j u_j||_p against ||c||_{l^p} and ||c||_{l^2} over
/// random Gaussian coefficients; smaller residual identifies the sequence
/// space the family actually spans.
DiagnosticFit lp_vs_l2_diagnostic(const SampleMatrix& fns, double p, int trials,
                                  std::uint64_t seed);

/// Masses of stage function `j` over the certificate's window partition
/// {eps_{n+1} <= |1 - chi| < eps_n}, n = 0..K (the n = 0 ring is everything
/// outside the first window, the last ring is the innermost window),
/// computed on the certificate grid. Summing the rings reproduces the total
/// mass on the circle exactly, node weight by node weight.
std::vector<double> annulus_masses(const Symbol& phi, const HumpCertificate& cert,
                                   int j);

/// Full-circle mass of stage function `j` on the certificate grid.
double total_mass_on_grid(const Symbol& phi, const HumpCertificate& cert, int j);

struct ReplayReport {
  bool ok = false;
  double max_deviation = 0.0;
  std::string detail;
};

/// Recomputes every stored stage quantity from fresh quadrature on the
/// certificate's grid and checks agreement to 1e-10 plus the inequalities.
ReplayReport replay_certificate(const Symbol& phi, const HumpCertificate& cert);

/// Selection, frame verification, and bookkeeping in one call.
HumpCertificate run_hump_pipeline(const Symbol& phi, double p, double ray,
                                  double delta, int target_k, int rungs,
                                  int trials, std::uint64_t seed, int threads = 1);

}  // namespace hardycomp
