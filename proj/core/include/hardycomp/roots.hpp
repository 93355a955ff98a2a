#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hardycomp/polynomial.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

/// All complex roots of a polynomial via the balanced companion matrix,
/// each polished with a few Newton steps on the original coefficients.
/// Degenerate inputs (degree < 1) return an empty list.
std::vector<Complex> poly_roots(const Poly& coeffs);

struct RootCluster {
  Complex center;
  int multiplicity;
};

/// Group points that fall within `radius` of each other (greedy, order-stable).
std::vector<RootCluster> cluster_roots(std::vector<Complex> roots, double radius);

}  // namespace hardycomp
