#include "hardycomp/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hardycomp {

QuadratureGrid QuadratureGrid::uniform(int n) {
  QuadratureGrid g;
  g.n_nodes = n;
  g.radius_ladder.reserve(20);
  for (int m = 1; m <= 20; ++m) {
    g.radius_ladder.push_back(1.0 - std::ldexp(1.0, -m));
  }
  return g;
}

int pow2_at_least(double x, int lo, int hi) {
  int n = lo;
  while (n < hi && static_cast<double>(n) < x) n *= 2;
  return n;
}

HumpGrid HumpGrid::build(std::vector<double> anchors, double min_scale,
                         double log_spacing) {
  HumpGrid g;
  g.log_spacing = log_spacing;
  if (anchors.empty()) anchors.push_back(0.0);
  for (auto& a : anchors) a = wrap_positive(a);
  std::sort(anchors.begin(), anchors.end());
  // Merge anchors closer than the resolvable scale.
  std::vector<double> merged;
  for (double a : anchors) {
    if (merged.empty() || a - merged.back() > 1e-9) merged.push_back(a);
  }
  if (merged.size() > 1 &&
      (kTwoPi - merged.back()) + merged.front() <= 1e-9) {
    merged.pop_back();
  }
  g.anchors = std::move(merged);
  const int a_count = static_cast<int>(g.anchors.size());

  double min_gap = kTwoPi;
  std::vector<double> gap_after(a_count);
  for (int i = 0; i < a_count; ++i) {
    const double next = g.anchors[(i + 1) % a_count] + (i + 1 == a_count ? kTwoPi : 0.0);
    gap_after[i] = next - g.anchors[i];
    min_gap = std::min(min_gap, gap_after[i]);
  }

  min_scale = std::max(min_scale, 1e-300);
  double floor = min_scale * 1e-6;
  floor = std::max(floor, 1e-152);  // keeps offset^2 inside normal doubles
  floor = std::min(floor, 0.05 * min_gap);
  g.floor_offset = floor;

  // Signed offsets per anchor: negative side ascending toward the anchor,
  // then 0, then the positive side out to the segment midpoint (owned by
  // this anchor; the next anchor's negative side stops short of it).
  struct Cell {
    int anchor;
    double offset;
  };
  std::vector<Cell> cells;
  const double h = log_spacing;
  for (int i = 0; i < a_count; ++i) {
    const double right_half = 0.5 * gap_after[i];
    const double left_half = 0.5 * gap_after[(i + a_count - 1) % a_count];

    // Negative side, from near the previous midpoint in toward this anchor.
    std::vector<double> neg;
    for (double d = floor; d < left_half * (1.0 - 0.5 * h); d *= std::exp(h)) {
      neg.push_back(-d);
    }
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) cells.push_back({i, *it});
    cells.push_back({i, 0.0});
    for (double d = floor; d < right_half * (1.0 - 0.5 * h); d *= std::exp(h)) {
      cells.push_back({i, d});
    }
    cells.push_back({i, right_half});  // segment midpoint
  }

  const std::size_t n = cells.size();
  g.nodes.resize(n);
  g.weights.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) g.nodes[k] = {cells[k].anchor, cells[k].offset};

  // Periodic trapezoid weights from consecutive spacings. Spacings never
  // subtract absolute angles: within one anchor they are offset differences,
  // across the midpoint they bridge via the known segment half-lengths.
  auto spacing = [&](std::size_t k) -> double {
    const Cell& a = cells[k];
    const Cell& b = cells[(k + 1) % n];
    if (k + 1 < n && a.anchor == b.anchor) return b.offset - a.offset;
    // a is a segment midpoint of its anchor; b is on the negative side of the
    // next anchor (or its center when the negative side is empty).
    const double left_half = 0.5 * gap_after[a.anchor];
    return left_half + b.offset;  // b.offset <= 0
  };
  std::vector<double> gaps(n);
  for (std::size_t k = 0; k < n; ++k) gaps[k] = spacing(k);
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = gaps[(k + n - 1) % n];
    g.weights[k] = 0.5 * (prev + gaps[k]) / kTwoPi;
  }
  return g;
}

std::string trend_name(Trend t) {
  switch (t) {
    case Trend::vanishing: return "vanishing";
    case Trend::non_vanishing: return "non-vanishing";
    case Trend::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Trend assess_trend(double first_rung, double final_rung, int m_max,
                   const TrendPolicy& policy) {
  if (final_rung < policy.zero_floor) return Trend::vanishing;
  const double rel = policy.rel_factor * first_rung * std::ldexp(1.0, -m_max);
  if (final_rung >= rel && final_rung >= policy.abs_floor) return Trend::non_vanishing;
  if (final_rung < rel) return Trend::vanishing;
  return Trend::inconclusive;
}

double aitken_limit(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n < 3) return values[n - 1];
  const double v1 = values[n - 3], v2 = values[n - 2], v3 = values[n - 1];
  const double d1 = v2 - v1, d2 = v3 - v2;
  const double denom = d2 - d1;
  const double scale = std::max({std::abs(v1), std::abs(v2), std::abs(v3), 1e-300});
  if (std::abs(denom) < 1e-12 * scale) return v3;
  return v3 - d2 * d2 / denom;
}

}  // namespace hardycomp
