#include <cmath>

#include "doctest.h"
#include "hardycomp/gliding_hump.hpp"

using namespace hardycomp;

namespace {

// Orthonormal exponentials e^{i n theta} sampled on a uniform grid.
SampleMatrix exponential_family(std::vector<int> freqs, int n_nodes) {
  SampleMatrix m;
  m.weights.assign(n_nodes, 1.0 / n_nodes);
  for (int f : freqs) {
    std::vector<Complex> row(n_nodes);
    for (int j = 0; j < n_nodes; ++j) row[j] = unit_at(kTwoPi * f * j / n_nodes);
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("the small-delta rule") {
  CHECK(delta_admissible(0.1, 1.0));
  CHECK(delta_admissible(0.1, 4.0));
  CHECK_FALSE(delta_admissible(0.5, 1.0));  // 0.5 * (1 - 1/2) = 1/4 exactly
  CHECK_FALSE(delta_admissible(0.3, 4.0));
  const auto ladder = select_test_points(Symbol::half_plus(), 1.0, 0.0, 10);
  CHECK_THROWS_AS(
      gliding_hump_select(Symbol::half_plus(), 1.0, ladder.d, ladder.points, 0.5, 6),
      DomainError);
}

TEST_CASE("test point ladders and the uniform lower bound") {
  const auto hp = select_test_points(Symbol::half_plus(), 1.0, 0.0, 10);
  CHECK(hp.points.size() == 10);
  CHECK(hp.d == doctest::Approx(0.9 * 1.5).epsilon(1e-4));

  const auto id = select_test_points(Symbol::identity(), 2.0, 0.0, 10);
  CHECK(id.d == doctest::Approx(0.9).epsilon(1e-3));

  CHECK_THROWS_AS(select_test_points(Symbol::dilation(0.5), 2.0, 0.0, 60), DomainError);
}

TEST_CASE("full certificate for the shifted-disk map at p = 1") {
  const Symbol hp = Symbol::half_plus();
  const HumpCertificate cert = run_hump_pipeline(hp, 1.0, 0.0, 0.1, 6, 200, 1000, 7);
  REQUIRE(cert.complete);
  REQUIRE(cert.stages.size() == 6);

  double prev_eps = 1e300, prev_gap = 1e300;
  for (std::size_t n = 0; n < cert.stages.size(); ++n) {
    const HumpStage& st = cert.stages[n];
    CHECK(st.eps < prev_eps);
    CHECK(st.gap < prev_gap);
    prev_eps = st.eps;
    prev_gap = st.gap;
    CHECK(st.prior_mass.size() == n);
    for (double m : st.prior_mass) CHECK(m < st.small_bound);
    CHECK(st.outside_mass < st.small_bound);
    CHECK(st.inside_mass > st.large_bound);
  }

  const ReplayReport rep = replay_certificate(hp, cert);
  CHECK(rep.ok);
  CHECK(rep.max_deviation <= 1e-10);

  REQUIRE(cert.frame.has_value());
  CHECK(cert.frame->c1_hat >= cert.d / 4.0 - 1e-9);
  CHECK(cert.frame->c2_hat >= cert.frame->c1_hat);
}

TEST_CASE("the identity symbol is its own hump family at p = 2") {
  const HumpCertificate cert =
      run_hump_pipeline(Symbol::identity(), 2.0, 0.0, 0.1, 6, 300, 1000, 7);
  REQUIRE(cert.complete);
  CHECK(cert.d == doctest::Approx(0.9).epsilon(1e-3));
  REQUIRE(cert.frame.has_value());
  CHECK(cert.frame->c1_hat >= cert.d / 4.0 - 1e-9);
  // Nearly orthogonal humps: both frame constants close to 1.
  CHECK(cert.frame->c1_hat > 0.9);
  CHECK(cert.frame->c2_hat < 1.1);
}

TEST_CASE("window partition reproduces the total mass exactly") {
  const Symbol hp = Symbol::half_plus();
  const HumpCertificate cert = run_hump_pipeline(hp, 1.0, 0.0, 0.1, 6, 200, 0, 7);
  REQUIRE(cert.complete);
  for (int j = 0; j < static_cast<int>(cert.stages.size()); ++j) {
    const auto rings = annulus_masses(hp, cert, j);
    double sum = 0.0;
    for (double r : rings) sum += r;
    const double total = total_mass_on_grid(hp, cert, j);
    CHECK(std::abs(sum - total) <= 1e-10 * std::max(1.0, total));
  }
}

TEST_CASE("point exhaustion produces an honest partial certificate") {
  const auto ladder = select_test_points(Symbol::half_plus(), 1.0, 0.0, 4);
  const HumpCertificate cert =
      gliding_hump_select(Symbol::half_plus(), 1.0, ladder.d, ladder.points, 0.1, 6);
  CHECK_FALSE(cert.complete);
  CHECK(cert.failure_stage >= 1);
  CHECK(cert.failure_reason == "test points exhausted");
}

TEST_CASE("frame bounds of orthonormal exponentials are unit") {
  const SampleMatrix m = exponential_family({1, 3, 9, 27}, 512);
  const FrameStats st = frame_bounds_verify(m, 2.0, 200, 3);
  CHECK(std::abs(st.c1_hat - 1.0) < 1e-10);
  CHECK(std::abs(st.c2_hat - 1.0) < 1e-10);
}

TEST_CASE("a repeated function breaks the lower frame bound") {
  SampleMatrix m = exponential_family({5, 5}, 256);
  const FrameStats st = frame_bounds_verify(m, 1.0, 4000, 17);
  CHECK(st.c1_hat < 0.25);  // near-cancelling coefficients are drawn eventually
  CHECK(st.c2_hat <= 1.0 + 1e-9);  // and |b1 + b2| <= |b1| + |b2| caps the top
  CHECK_THROWS_AS(frame_bounds_verify(exponential_family({1}, 64), 1.0, 10, 1),
                  DomainError);
}

TEST_CASE("sequence-space diagnostic tells the two regimes apart") {
  // Hump certificates behave like the coefficient l^p norm.
  const Symbol hp = Symbol::half_plus();
  const HumpCertificate cert = run_hump_pipeline(hp, 4.0, 0.0, 0.1, 6, 500, 0, 7);
  REQUIRE(cert.complete);
  const SampleMatrix humps = certificate_samples(hp, cert);
  const DiagnosticFit hump_fit = lp_vs_l2_diagnostic(humps, 4.0, 400, 11);
  CHECK(hump_fit.residual_lp < hump_fit.residual_l2);

  // Lacunary monomials behave like the coefficient l^2 norm at p = 4.
  const SampleMatrix mono = exponential_family({1, 2, 4, 8, 16, 32, 64}, 1024);
  const DiagnosticFit mono_fit = lp_vs_l2_diagnostic(mono, 4.0, 400, 11);
  CHECK(mono_fit.residual_l2 < mono_fit.residual_lp);

  // p = 2 degeneracy: both fits coincide.
  const SampleMatrix basis = exponential_family({1, 2, 4, 8}, 512);
  const DiagnosticFit basis_fit = lp_vs_l2_diagnostic(basis, 2.0, 200, 11);
  CHECK(basis_fit.residual_lp < 1e-9);
  CHECK(basis_fit.residual_l2 < 1e-9);
}
