#include <cmath>
#include <vector>

#include "doctest.h"
#include "hardycomp/rng.hpp"
#include "hardycomp/symbol.hpp"

using namespace hardycomp;

TEST_CASE("builtin expressions parse and evaluate") {
  CHECK(Symbol::parse("identity").eval({0.3, 0.1}) == Complex(0.3, 0.1));
  CHECK(std::abs(Symbol::parse("half_plus").eval({1, 0}) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(Symbol::parse("power(2)").eval({0, 1}) - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(Symbol::parse("dilation(0.5)").eval({0.8, 0}) - Complex(0.4, 0)) < 1e-15);
  CHECK(std::abs(Symbol::parse("rot(1.5)").eval({0.5, 0}) - 0.5 * unit_at(1.5)) < 1e-15);
  CHECK(std::abs(Symbol::parse("const(0.2+0.3i)").eval({0.9, 0}) - Complex(0.2, 0.3)) < 1e-15);
  CHECK(std::abs(Symbol::parse("poly(0,0.5,0.5)").eval({1, 0}) - Complex(1, 0)) < 1e-15);
  const Symbol m = Symbol::parse("mobius(0.5)");
  CHECK(std::abs(m.eval({0.5, 0})) < 1e-15);
  CHECK(std::abs(m.eval({0, 0}) - Complex(0.5, 0)) < 1e-15);
  CHECK(Symbol::parse("compose(power(2),mobius(0.5))").degree() == 2);
  CHECK(std::abs(Symbol::parse("blaschke(0.3,-0.4)").boundary_trace(0.7)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("whitespace and signed complex literals") {
  CHECK_NOTHROW(Symbol::parse(" compose( rot(-0.5) , mobius(0.1-0.2i) ) "));
  CHECK_NOTHROW(Symbol::parse("poly(0, -0.25, 0.25e0)"));
  CHECK_NOTHROW(Symbol::parse("const(-0.5)"));
  CHECK_NOTHROW(Symbol::parse("const(0+0.5i)"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(Symbol::parse("nonsense"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("power(2"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("mobius(0.5+0.2)"), ParseError);  // missing i
  CHECK_THROWS_AS(Symbol::parse("identity extra"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("poly()"), ParseError);
  try {
    Symbol::parse("compose(identity,junk)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position >= 17);
  }
}

TEST_CASE("parameters are range checked") {
  CHECK_THROWS_AS(Symbol::parse("mobius(1.0)"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("blaschke(0.3,1.2)"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("power(0)"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("power(-3)"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("dilation(1.5)"), ParseError);
  CHECK_THROWS_AS(Symbol::parse("const(1.0)"), ParseError);
}

TEST_CASE("self-map validation rejects expanding maps") {
  CHECK_THROWS_AS(Symbol::poly({Complex(0.5), Complex(0.6)}), DomainError);
  CHECK_THROWS_AS(Symbol::poly({Complex(0.0), Complex(0.8), Complex(0.4)}), DomainError);
  // Boundary modulus exactly 1 is a legal self-map.
  CHECK_NOTHROW(Symbol::poly({Complex(0.0), Complex(0.5), Complex(0.5)}));
}

TEST_CASE("every builtin passes self-map validation") {
  const std::vector<Symbol> gallery = {
      Symbol::identity(),      Symbol::half_plus(),
      Symbol::power(2),        Symbol::power(7),
      Symbol::dilation(0.5),   Symbol::rotation(2.2),
      Symbol::constant({0.3, 0.2}),
      Symbol::poly({Complex(0.1), Complex(0.2), Complex(0.3)}),
      Symbol::mobius({0.5, 0.0}),
      Symbol::mobius({0.3, -0.4}),
      Symbol::blaschke({Complex(0.5), Complex(-0.2, 0.3)}),
      Symbol::compose(Symbol::power(2), Symbol::mobius({0.5, 0.0})),
  };
  for (const Symbol& s : gallery) {
    CHECK(s.boundary_modulus_max() <= 1.0 + Symbol::kSelfMapTol);
  }
}

TEST_CASE("composition consistency at random interior points") {
  struct Pair {
    Symbol outer, inner;
  };
  const std::vector<Pair> pairs = {
      {Symbol::power(2), Symbol::mobius({0.5, 0.0})},
      {Symbol::half_plus(), Symbol::rotation(1.0)},
      {Symbol::mobius({0.3, 0.2}), Symbol::blaschke({Complex(0.4), Complex(-0.3)})},
      {Symbol::poly({Complex(0.1), Complex(0.4), Complex(0.2)}), Symbol::dilation(0.7)},
  };
  Rng rng(42);
  for (const auto& [outer, inner] : pairs) {
    const Symbol both = Symbol::compose(outer, inner);
    for (int i = 0; i < 250; ++i) {
      const Complex z = 0.98 * rng.unit_disk();
      const Complex lhs = both.eval(z);
      const Complex rhs = outer.eval(inner.eval(z));
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("boundary traces of the closed-disk class are exact") {
  CHECK(std::abs(Symbol::half_plus().boundary_trace(0.0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(Symbol::power(3).boundary_trace(kPi) - Complex(-1, 0)) < 1e-12);
  const Complex v = Symbol::dilation(0.9).boundary_trace(1.234);
  CHECK(std::abs(v - 0.9 * unit_at(1.234)) < 1e-15);
}

TEST_CASE("rotation normalization sends the contact value to 1") {
  const Symbol phi = Symbol::mobius({0.4, 0.0});
  const double theta_c = 0.7;
  const double psi = std::arg(phi.boundary_trace(theta_c));
  const Symbol rotated = phi.rotated(-psi);
  CHECK(std::abs(rotated.boundary_trace(theta_c) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("radial-limit ladder converges for tame maps and reports failure") {
  const auto grid_ladder = [] {
    std::vector<double> l;
    for (int m = 1; m <= 20; ++m) l.push_back(1.0 - std::ldexp(1.0, -m));
    return l;
  }();

  const Symbol open_dil = Symbol::dilation(0.5).assume_open_disk_only();
  CHECK(std::abs(open_dil.boundary_trace(0.8, grid_ladder) - 0.5 * unit_at(0.8)) < 1e-5);

  // A two-rung ladder cannot detect the limit of a boundary-steep map.
  const std::vector<double> short_ladder = {0.5, 0.75};
  const Symbol open_mob = Symbol::mobius({0.9, 0.0}).assume_open_disk_only();
  CHECK_THROWS_AS(open_mob.boundary_trace(0.0, short_ladder, 1e-9), NumericError);

  // Unflagged maps refuse direct boundary evaluation.
  CHECK_THROWS_AS(open_dil.eval(unit_at(0.3)), DomainError);
}

TEST_CASE("constants are detected structurally") {
  CHECK(Symbol::parse("const(0.2)").is_constant());
  CHECK(Symbol::parse("dilation(0)").is_constant());
  CHECK(Symbol::parse("poly(0.4)").is_constant());
  CHECK(Symbol::parse("compose(half_plus,const(0.2))").is_constant());
  CHECK(std::abs(Symbol::parse("compose(half_plus,const(0.2))").constant_value() -
                 Complex(0.6, 0)) < 1e-15);
  CHECK_FALSE(Symbol::parse("rot(0.3)").is_constant());
  CHECK_FALSE(Symbol::parse("power(5)").is_constant());
}

TEST_CASE("canonical text reparses to the same map") {
  const Symbol s = Symbol::parse("compose(rot(-1.25),blaschke(0.3+0.1i,-0.2))");
  const Symbol t = Symbol::parse(s.text());
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Complex z = 0.95 * rng.unit_disk();
    CHECK(std::abs(s.eval(z) - t.eval(z)) < 1e-14);
  }
}
