#pragma once

#include <vector>

#include "hardycomp/polynomial.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

/// Angles of the boundary values phi takes at its contact points (the
/// finitely many solutions of |phi| = 1 on the circle). Returns an empty
/// list when phi is inner (every direction is a contact direction) or has
/// no boundary contact at all. Ray scans toward the boundary miss the
/// concentration direction of a rotated map unless these are added.
std::vector<double> contact_value_angles(const Symbol& phi);

/// Boundary values of 1 - phi(e^{i theta}) in factored form. The numerator
/// of 1 - phi is split into linear factors; factors whose roots sit on the
/// unit circle ("anchors", the angles where phi = 1) are evaluated through
/// exact circle differences, so tiny offsets from an anchor never cancel.
class BoundaryMap {
 public:
  explicit BoundaryMap(const Symbol& phi);

  const std::vector<double>& anchors() const { return anchor_angles_; }

  /// 1 - phi at theta = anchors[anchor_idx] + offset. anchor_idx = -1 means
  /// theta is an absolute angle (no anchored factor nearby).
  Complex one_minus(int anchor_idx, double offset) const;

  /// Convenience for absolute angles away from anchors.
  Complex one_minus(double theta) const { return one_minus(-1, theta); }

 private:
  Complex lead_{1.0, 0.0};
  std::vector<Complex> roots_;      // roots of den - num, duplicates kept
  std::vector<int> root_anchor_;    // anchor index or -1
  std::vector<double> anchor_angles_;
  Poly den_;
  bool constant_ = false;
  Complex constant_value_{0.0, 0.0};
};

}  // namespace hardycomp
