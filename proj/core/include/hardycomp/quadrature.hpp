#pragma once

#include <span>
#include <string>
#include <vector>

#include "hardycomp/types.hpp"

namespace hardycomp {

/// Uniform boundary grid theta_j = 2 pi j / n, weight 1/n each (normalized
/// Lebesgue measure), with an increasing radius ladder for interior means.
struct QuadratureGrid {
  int n_nodes = kDefaultNodes;
  std::vector<double> radius_ladder;

  static constexpr int kDefaultNodes = 8192;

  static QuadratureGrid uniform(int n = kDefaultNodes);

  double node_angle(int j) const { return kTwoPi * j / n_nodes; }
  double weight() const { return 1.0 / n_nodes; }
};

/// Round up to a power of two, clamped to [lo, hi].
int pow2_at_least(double x, int lo, int hi);

// ---------------------------------------------------------------------------
// Composite boundary grid for integrands that peak at contact angles on
// scales far below any uniform resolution. Nodes are placed geometrically
// away from each anchor and kept as (anchor, offset) pairs: offsets down to
// ~1e-145 stay exact even though anchor + offset would round away.

struct HumpNode {
  int anchor;     // index into anchors
  double offset;  // signed angular offset from that anchor
};

struct HumpGrid {
  std::vector<double> anchors;   // sorted in [0, 2 pi)
  std::vector<HumpNode> nodes;   // in circular order
  std::vector<double> weights;   // trapezoid cells / 2 pi, sum ~ 1
  double floor_offset = 0.0;     // innermost |offset| at each anchor
  double log_spacing = 0.0;

  std::size_t size() const { return nodes.size(); }

  /// min_scale is the smallest feature width the grid must resolve.
  static HumpGrid build(std::vector<double> anchors, double min_scale,
                        double log_spacing = 0.025);
};

// ---------------------------------------------------------------------------
// Trend policy shared by the two compactness criteria: the final rung is
// compared against a decayed multiple of the first rung and an absolute
// floor. A finite ladder can only report a trend, never certify the limit.

enum class Trend { vanishing, non_vanishing, inconclusive };

std::string trend_name(Trend t);

struct TrendPolicy {
  double rel_factor = 10.0;
  double abs_floor = 1e-3;
  double zero_floor = 1e-9;
};

Trend assess_trend(double first_rung, double final_rung, int m_max,
                   const TrendPolicy& policy = {});

/// Geometric-sequence limit guess from the last three rung values
/// (Aitken delta-squared). Falls back to the last value when degenerate.
double aitken_limit(std::span<const double> values);

}  // namespace hardycomp
