#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "hardycomp/hardy.hpp"
#include "hardycomp/rng.hpp"

using namespace hardycomp;

namespace {

const QuadratureGrid& grid() {
  static QuadratureGrid g = QuadratureGrid::uniform();
  return g;
}

BoundaryFn poly_fn(std::vector<Complex> coeffs) {
  return [c = std::move(coeffs)](Complex z) {
    Complex acc = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
}

}  // namespace

TEST_CASE("constant functions have unit norm for every p") {
  for (double p : {1.0, 2.0, 3.0, 4.0}) {
    CHECK(hp_norm([](Complex) { return Complex(1.0); }, p, grid()) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("fourth norm of z + z^2 matches the moment expansion") {
  // mean of |z + z^2|^4 equals 6 by expanding the pair collisions.
  const double n4 = hp_norm(poly_fn({Complex(0), Complex(1), Complex(1)}), 4.0, grid());
  CHECK(n4 == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-10));
}

TEST_CASE("kernel test functions are normalized on a polar grid") {
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int i = 0; i < 8; ++i) {
      const Complex a = r * unit_at(kTwoPi * i / 8.0);
      for (double p : {1.0, 2.0, 3.0, 4.0}) {
        const TestFunction g{a, p};
        CHECK(std::abs(hp_norm([&](Complex z) { return g(z); }, p, grid()) - 1.0) < 1e-8);
      }
    }
  }
}

TEST_CASE("closed forms for composed test masses") {
  const Symbol hp = Symbol::half_plus();
  for (double a : {0.9, 0.99, 0.999}) {
    for (double p : {1.0, 2.0, 4.0}) {
      CHECK(composed_test_mass(hp, {a, 0.0}, p, grid()).mass ==
            doctest::Approx(1.0 + a).epsilon(1e-7));
    }
  }
  // identity: the test functions are already normalized
  CHECK(composed_test_norm(Symbol::identity(), {0.9, 0.0}, 2.0, grid()) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // constant: g_a(0) = (1-|a|^2)^{1/p}
  CHECK(composed_test_norm(Symbol::constant({0, 0}), {0.99, 0.0}, 2.0, grid()) ==
        doctest::Approx(std::sqrt(1.0 - 0.99 * 0.99)).epsilon(1e-10));
  // dilation: mass (1-a^2)/(1-a^2/4)
  for (double a : {0.5, 0.9, 0.99}) {
    CHECK(composed_test_mass(Symbol::dilation(0.5), {a, 0.0}, 2.0, grid()).mass ==
          doctest::Approx((1 - a * a) / (1 - a * a / 4)).epsilon(1e-9));
  }
}

TEST_CASE("compactness trends separate decay from plateau") {
  const auto dil = compactness_score(Symbol::dilation(0.5), 2.0, 16, 1, 12, grid());
  CHECK(dil.verdict == Trend::vanishing);

  const auto id = compactness_score(Symbol::identity(), 2.0, 8, 1, 12, grid());
  CHECK(id.verdict == Trend::non_vanishing);
  CHECK(id.rung_max[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(id.rung_max[5] == doctest::Approx(1.0).epsilon(1e-6));

  const auto hp = compactness_score(Symbol::half_plus(), 1.0, 16, 1, 12, grid());
  CHECK(hp.verdict == Trend::non_vanishing);
  for (double s : hp.rung_max) CHECK(s >= 0.1);
  CHECK(hp.best_ray() == doctest::Approx(0.0));
}

TEST_CASE("subordination: composition with a 0-fixing map does not grow norms") {
  const std::vector<Symbol> fixing = {Symbol::rotation(1.0), Symbol::power(3),
                                      Symbol::dilation(0.7), Symbol::mobius({0, 0}),
                                      Symbol::poly({Complex(0), Complex(0.3),
                                                    Complex(0), Complex(0.4)})};
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> coeffs(1 + static_cast<int>(rng.uniform() * 12));
    for (auto& c : coeffs) c = rng.gaussian();
    const auto f = poly_fn(coeffs);
    for (const Symbol& phi : fixing) {
      for (double p : {1.0, 2.0, 4.0}) {
        const double base = hp_norm(f, p, grid());
        const double composed =
            hp_norm([&](Complex z) { return f(phi.eval(z)); }, p, grid());
        CHECK(composed <= base * (1.0 + 1e-5) + 1e-12);
      }
    }
  }
}

TEST_CASE("circle means are nondecreasing in the radius") {
  const auto f = poly_fn({Complex(0.2), Complex(0.5, 0.1), Complex(0, 0.3)});
  for (double p : {1.0, 2.0, 3.0}) {
    const auto means = circle_means(f, p, grid());
    for (std::size_t i = 1; i < means.size(); ++i) {
      CHECK(means[i] >= means[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("trapezoid quadrature is converged at modest node counts") {
  std::vector<Complex> coeffs(65);
  double fact = 1.0;
  for (int k = 0; k <= 64; ++k) {
    coeffs[k] = 1.0 / fact;
    fact *= (k + 1);
  }
  const auto f = poly_fn(coeffs);
  const auto zero_free = poly_fn({Complex(3.5), Complex(1.0)});
  for (int n : {256, 512, 1024}) {
    const double a = hp_norm(f, 2.0, QuadratureGrid::uniform(n));
    const double b = hp_norm(f, 2.0, QuadratureGrid::uniform(2 * n));
    CHECK(std::abs(a - b) < 1e-12);
    const double c = hp_norm(zero_free, 3.0, QuadratureGrid::uniform(n));
    const double d = hp_norm(zero_free, 3.0, QuadratureGrid::uniform(2 * n));
    CHECK(std::abs(c - d) < 1e-12);
  }
}

TEST_CASE("malformed samples are rejected") {
  std::vector<Complex> samples = {Complex(1.0), Complex(std::nan(""), 0.0)};
  CHECK_THROWS_AS(hp_norm_samples(samples, 2.0), NumericError);
  CHECK_THROWS_AS(hp_norm_samples({}, 2.0), DomainError);
  CHECK_THROWS_AS(hp_norm_samples(samples, 0.5), DomainError);
}

TEST_CASE("radial-limit exclusions stay under the reporting threshold") {
  // Tame open-disk map: every node's ladder converges.
  const auto res =
      composed_test_mass(Symbol::dilation(0.5).assume_open_disk_only(), {0.5, 0.0},
                         2.0, grid());
  CHECK(res.excluded_fraction == 0.0);
  CHECK(res.mass == doctest::Approx(0.75 / (1 - 0.25 * 0.25)).epsilon(1e-4));

  // Boundary-steep map: too many nodes fail to converge on the ladder.
  CHECK_THROWS_AS(composed_test_mass(Symbol::mobius({0.9, 0.0}).assume_open_disk_only(),
                                     {0.5, 0.0}, 2.0, grid()),
                  NumericError);
}
