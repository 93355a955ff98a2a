#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hardycomp/quadrature.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

using GramMatrix = std::vector<std::vector<Complex>>;

/// Inner products (phi^{n_j}, phi^{n_k}) by boundary quadrature. The grid is
/// refined so the integrands stay below the Nyquist bound.
GramMatrix gram_matrix(const Symbol& phi, std::span<const int> powers,
                       const QuadratureGrid& grid);

struct TrialStats {
  int trials = 0;
  std::uint64_t seed = 0;
  double min_quotient = 0.0;
  double max_quotient = 0.0;
};

struct LacunaryCertificate {
  std::string symbol_text;
  std::vector<int> powers;   // n_1 < n_2 < ...; n_1 = 0 allowed
  double q_min = 0.0;        // min n_{k+1}/n_k over positive n_k
  double m_e = 0.0;          // contact measure used by the bounds
  GramMatrix gram;
  int grid_nodes = 0;
  TrialStats bound_checks;   // filled by l2_lower_bound_verify
};

/// Greedy selection of powers with geometrically small cross inner products:
/// |(phi^{n_j}, phi^{n_k})| <= 2^{-2k} m_E for j < k, scanning lacunarily
/// (n <- max(n+1, ceil(q n))). Scan cap 10^6.
LacunaryCertificate select_lacunary_powers(const Symbol& phi, double m_e, int k,
                                           double q, const QuadratureGrid& grid);

/// Min/max of ||sum c_k phi^{n_k}||_2^2 over l^2-normalized Gaussian draws;
/// the lower bound target is m_E / 2.
TrialStats l2_lower_bound_verify(const Symbol& phi, const LacunaryCertificate& cert,
                                 int trials, std::uint64_t seed, int threads = 1);

struct PaleyStats {
  int trials = 0;
  std::uint64_t seed = 0;
  int grid_nodes = 0;
  double ratio_min = 0.0;        // ||sum c_k z^{n_k}||_p / ||c||_2
  double ratio_max = 0.0;
  double max_p4_mismatch = 0.0;  // quadrature vs exact fourth moment (p = 4)
};

/// Norm-equivalence ratios for lacunary monomials against the l^2 norm of
/// the coefficients; at p = 4 every trial is cross-checked against the exact
/// combinatorial fourth moment.
PaleyStats paley_equivalence_check(std::span<const int> powers, double p, int trials,
                                   std::uint64_t seed,
                                   const QuadratureGrid& grid = QuadratureGrid::uniform(),
                                   int threads = 1);

/// Exact ||sum c_k z^{n_k}||_4^4 from pair collisions n_j + n_k = n_l + n_m.
double exact_fourth_moment(std::span<const int> powers, std::span<const Complex> c);

/// Empirical K' = min ||sum c_k phi^{n_k}||_1 / ||c||_2 (positivity witness).
TrialStats h1_lower_bound_check(const Symbol& phi, const LacunaryCertificate& cert,
                                int trials, std::uint64_t seed, int threads = 1);

}  // namespace hardycomp
