#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardycomp/quadrature.hpp"
#include "hardycomp/symbol.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

enum class ContactVerdict { zero, positive, inconclusive };

std::string contact_verdict_name(ContactVerdict v);

struct ContactProfile {
  std::vector<double> theta;    // boundary sample angles
  std::vector<double> modulus;  // |phi| at those angles
  std::vector<double> tau;      // thresholds, decreasing
  std::vector<double> measure;  // fraction of nodes with |phi| >= 1 - tau
  double m0 = 0.0;              // extrapolated contact measure
  double m0_stderr = 0.0;
  double fit_alpha = 0.0;       // measure(tau) ~ m0 + C tau^alpha
  double fit_c = 0.0;
  ContactVerdict verdict = ContactVerdict::inconclusive;
  int n_nodes = 0;
};

/// Level-set measure curve of |phi| near the boundary, with a power-law fit
/// extrapolating the contact measure. m0 is declared zero below
/// max(3 stderr, 2/n_nodes).
ContactProfile contact_measure(const Symbol& phi, std::span<const double> tau_ladder,
                               const QuadratureGrid& grid);

std::vector<double> default_tau_ladder();

/// Masses of |C_phi(g_a)|^p inside and outside {xi : |phi(xi) - 1| < eps}.
/// The symbol is expected to be pre-rotated so its contact point is 1.
std::pair<double, double> mass_split(const Symbol& phi, Complex a, double p,
                                     double eps, const QuadratureGrid& grid);

struct PullbackReport {
  int n_arcs = 0;
  bool recentered = false;         // map was normalized to fix 0
  double tau_min = 1e-6;           // membership threshold for the contact set
  double m_e_hat = 0.0;            // estimated contact measure (node fraction)
  std::vector<double> nu;          // pushforward measure per arc
  std::vector<double> density;     // nu / m per arc
  std::vector<double> stderr_nu;   // binomial error scale per arc
  std::vector<bool> in_f;          // arcs where density >= delta
  double delta = 0.0;
  std::string status;              // nonempty when F is empty by construction
  int n_nodes = 0;
};

/// Histogram pushforward of the boundary values of phi restricted to the
/// contact set, with the positive-density arc union F. delta <= 0 selects
/// half of the maximum observed density.
PullbackReport pullback_density(const Symbol& phi, int n_arcs,
                                const QuadratureGrid& grid, double delta = 0.0);

struct LowerBoundCheck {
  double lhs = 0.0;  // integral of |f(phi)|^p over the contact set
  double rhs = 0.0;  // delta * integral of |f|^p over F
  double tol = 0.0;
  bool pass = false;
};

/// Verifies the pullback lower bound for a boundary function supported on F.
LowerBoundCheck pullback_lower_bound_check(const Symbol& phi,
                                           const std::function<Complex(double)>& f,
                                           double p, const PullbackReport& report,
                                           const QuadratureGrid& grid);

/// Harmonic extension of an arc indicator evaluated at z (harmonic measure
/// of the arc [start, start+length] seen from z). Exact at z = 0.
double harmonic_measure_arc(Complex z, double arc_start, double arc_length);

/// Poisson integral of sampled boundary data at an interior point.
double poisson_extension(std::span<const double> boundary_values,
                         const QuadratureGrid& grid, Complex z);

}  // namespace hardycomp
