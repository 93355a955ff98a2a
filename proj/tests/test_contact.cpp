#include <cmath>

#include "doctest.h"
#include "hardycomp/contact.hpp"
#include "hardycomp/rng.hpp"

using namespace hardycomp;

namespace {
const QuadratureGrid& grid() {
  static QuadratureGrid g = QuadratureGrid::uniform();
  return g;
}
}  // namespace

TEST_CASE("level-set curves of the closed forms") {
  const auto p2 = contact_measure(Symbol::power(2), default_tau_ladder(), grid());
  for (double m : p2.measure) CHECK(m == 1.0);
  CHECK(p2.m0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p2.verdict == ContactVerdict::positive);

  const auto hp = contact_measure(Symbol::half_plus(), default_tau_ladder(), grid());
  for (std::size_t i = 0; i < hp.tau.size(); ++i) {
    const double exact = 2.0 * std::acos(1.0 - hp.tau[i]) / kPi;
    CHECK(std::abs(hp.measure[i] - exact) <= 2.0 / grid().n_nodes + 1e-12);
  }
  CHECK(hp.verdict == ContactVerdict::zero);

  const auto dil = contact_measure(Symbol::dilation(0.5), default_tau_ladder(), grid());
  for (double m : dil.measure) CHECK(m == 0.0);
  CHECK(dil.m0 == 0.0);
  CHECK(dil.verdict == ContactVerdict::zero);
}

TEST_CASE("measure curves shrink with the threshold") {
  const auto hp = contact_measure(Symbol::half_plus(), default_tau_ladder(), grid());
  for (std::size_t i = 1; i < hp.measure.size(); ++i) {
    CHECK(hp.measure[i] <= hp.measure[i - 1]);
  }
  CHECK_THROWS_AS(
      contact_measure(Symbol::half_plus(), std::vector<double>{0.1, 0.2}, grid()),
      DomainError);
}

TEST_CASE("window mass split: totals, bounds, and limits") {
  const Symbol hp = Symbol::half_plus();

  // eps >= 2 puts the whole circle inside the window.
  auto [inside, outside] = mass_split(hp, {0.9, 0.0}, 2.0, 2.0, grid());
  CHECK(outside == 0.0);
  CHECK(inside == doctest::Approx(1.9).epsilon(1e-8));

  // Kernel-decay envelope for the outside mass.
  const double a = 0.999;
  auto [in2, out2] = mass_split(hp, {a, 0.0}, 1.0, 0.1, grid());
  const double envelope = 4.0 * (1.0 - a * a) / (0.1 * 0.1);
  CHECK(out2 < envelope);
  CHECK(out2 > 0.0);
  CHECK(in2 + out2 == doctest::Approx(1.0 + a).epsilon(1e-7));

  // Fixed test point: the inside mass vanishes with the window.
  double prev = 1e300;
  for (double eps : {0.1, 0.01, 0.001}) {
    auto [in3, out3] = mass_split(hp, {0.9, 0.0}, 1.0, eps, grid());
    CHECK(in3 < prev);
    prev = in3;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("pushforward density of measure-preserving boundary maps") {
  const QuadratureGrid big = QuadratureGrid::uniform(1 << 16);

  const auto rot = pullback_density(Symbol::rotation(kPi), 64, big, 0.99);
  CHECK(rot.status.empty());
  CHECK(rot.m_e_hat == 1.0);
  for (int k = 0; k < rot.n_arcs; ++k) {
    // Nodes sitting exactly on arc boundaries may bin either way.
    CHECK(std::abs(rot.density[k] - 1.0) <= 2.0 * rot.n_arcs / big.n_nodes);
    CHECK(rot.in_f[k]);
  }

  const auto dbl = pullback_density(Symbol::power(2), 64, big, 0.0);
  CHECK(dbl.delta == doctest::Approx(0.5).epsilon(0.05));
  for (int k = 0; k < dbl.n_arcs; ++k) {
    const double stderr3 = 3.0 * dbl.stderr_nu[k] * dbl.n_arcs;
    CHECK(std::abs(dbl.density[k] - 1.0) <= stderr3);
    CHECK(dbl.nu[k] <= 1.0 / dbl.n_arcs + 3.0 * dbl.stderr_nu[k]);
  }
  double total = 0.0;
  for (double v : dbl.nu) total += v;
  CHECK(total == doctest::Approx(dbl.m_e_hat).epsilon(1e-12));
}

TEST_CASE("null contact sets produce an empty arc union with a status") {
  const auto hp = pullback_density(Symbol::half_plus(), 64, grid(), 0.0);
  CHECK_FALSE(hp.status.empty());
  for (bool b : hp.in_f) CHECK_FALSE(b);
  CHECK(hp.delta == 0.0);
}

TEST_CASE("recentering reduces an automorphism to the identity pushforward") {
  const QuadratureGrid big = QuadratureGrid::uniform(1 << 14);
  const auto rep = pullback_density(Symbol::mobius({0.5, 0.0}), 64, big, 0.0);
  CHECK(rep.recentered);
  for (int k = 0; k < rep.n_arcs; ++k) {
    CHECK(rep.nu[k] <= 1.0 / rep.n_arcs + 3.0 * rep.stderr_nu[k] + 1e-12);
  }
}

TEST_CASE("pullback lower bound check") {
  const QuadratureGrid big = QuadratureGrid::uniform(1 << 16);

  // Measure-preserving rotation: equality up to grid error.
  const auto rot = pullback_density(Symbol::rotation(kPi), 64, big, 0.99);
  const auto arc_indicator = [](double lo, double hi) {
    return [lo, hi](double th) {
      th = wrap_positive(th);
      return (th >= lo && th < hi) ? Complex(1.0) : Complex(0.0);
    };
  };
  const auto chk =
      pullback_lower_bound_check(Symbol::rotation(kPi), arc_indicator(0.0, kPi), 2.0,
                                 rot, big);
  CHECK(chk.pass);
  CHECK(chk.lhs == doctest::Approx(0.5).epsilon(1e-3));

  // Doubling map against a single arc at delta = 0.9.
  const auto dbl = pullback_density(Symbol::power(2), 64, big, 0.9);
  const double lo = kTwoPi * 5 / 64, hi = kTwoPi * 6 / 64;
  const auto chk2 = pullback_lower_bound_check(Symbol::power(2),
                                               arc_indicator(lo, hi), 1.0, dbl, big);
  CHECK(chk2.pass);
  CHECK(chk2.lhs == doctest::Approx(1.0 / 64).epsilon(1e-2));

  // Constant 1 on F = T at p = 4.
  const auto chk3 = pullback_lower_bound_check(
      Symbol::power(2), [](double) { return Complex(1.0); }, 4.0, dbl, big);
  CHECK(chk3.pass);
  CHECK(chk3.lhs == doctest::Approx(1.0).epsilon(1e-12));

  // Support leakage is rejected: shrink F by a large delta, keep f global.
  auto tight = pullback_density(Symbol::rotation(1.0), 64, big, 0.0);
  for (int k = 0; k < tight.n_arcs; ++k) tight.in_f[k] = (k == 0);
  CHECK_THROWS_AS(pullback_lower_bound_check(Symbol::rotation(1.0),
                                             [](double) { return Complex(1.0); }, 1.0,
                                             tight, big),
                  DomainError);
}

TEST_CASE("harmonic extension of arc indicators") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const double start = kTwoPi * rng.uniform();
    const double len = 0.05 + (kTwoPi - 0.1) * rng.uniform();
    CHECK(std::abs(harmonic_measure_arc({0, 0}, start, len) - len / kTwoPi) < 1e-10);
  }
  // Against the quadrature Poisson integral at an interior point.
  const double start = 0.7, len = 1.9;
  std::vector<double> samples(grid().n_nodes);
  for (int j = 0; j < grid().n_nodes; ++j) {
    const double th = grid().node_angle(j);
    samples[j] = (th >= start && th < start + len) ? 1.0 : 0.0;
  }
  const Complex z{0.3, -0.2};
  CHECK(std::abs(poisson_extension(samples, grid(), z) -
                 harmonic_measure_arc(z, start, len)) < 5e-3);
  // Smooth data reproduce the harmonic extension to spectral accuracy.
  std::vector<double> smooth(grid().n_nodes);
  for (int j = 0; j < grid().n_nodes; ++j) {
    smooth[j] = std::cos(3.0 * grid().node_angle(j));
  }
  const double exact = std::pow(std::abs(z), 3.0) * std::cos(3.0 * std::arg(z));
  CHECK(std::abs(poisson_extension(smooth, grid(), z) - exact) < 1e-12);
}
