#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardycomp/polynomial.hpp"
#include "hardycomp/types.hpp"

namespace hardycomp {

/// Quotient of two polynomials in the disk coordinate.
struct RationalFn {
  Poly num{Complex(0.0)};
  Poly den{Complex(1.0)};

  Complex eval(Complex z) const;
  int degree() const;
  void normalize();

  /// outer(inner(z)) with denominators cleared.
  static RationalFn compose(const RationalFn& outer, const RationalFn& inner);
};

/// An analytic self-map of the unit disk, built from the expression language
///
///   expr := "identity" | "half_plus" | "power(" int ")" | "dilation(" real ")"
///         | "rot(" real ")" | "const(" complex ")"
///         | "poly(" complex {"," complex} ")" | "mobius(" complex ")"
///         | "blaschke(" complex {"," complex} ")" | "compose(" expr "," expr ")"
///   complex := real [("+"|"-") real "i"]
///
/// Every expressible map is rational and pole-free on the closed disk; the
/// self-map property is validated numerically on a dense boundary grid.
class Symbol {
 public:
  static constexpr int kValidationNodes = 4096;
  static constexpr double kSelfMapTol = 1e-9;

  static Symbol parse(std::string_view text);

  static Symbol identity();
  static Symbol half_plus();                       // z -> (1+z)/2
  static Symbol power(int n);                      // z -> z^n, n >= 1
  static Symbol dilation(double r);                // z -> r z, |r| <= 1
  static Symbol rotation(double theta);            // z -> e^{i theta} z
  static Symbol constant(Complex c);               // |c| < 1
  static Symbol poly(std::vector<Complex> coeffs); // c0 + c1 z + ...
  static Symbol mobius(Complex a);                 // z -> (a - z)/(1 - conj(a) z)
  static Symbol blaschke(std::vector<Complex> zeros);
  static Symbol compose(const Symbol& outer, const Symbol& inner);

  /// Value at an interior point (boundary points allowed for maps declared
  /// holomorphic on the closed disk).
  Complex eval(Complex z) const;

  /// Radial limit at angle theta. Exact continuous extension when the map is
  /// holomorphic on the closed disk.
  Complex boundary_trace(double theta) const;

  /// Radial limit estimated along an increasing radius ladder, with
  /// convergence detection. The default tolerance matches the resolution of
  /// the default ladder (last rung 1 - 2^{-20}). Throws NumericError when
  /// undetected.
  Complex boundary_trace(double theta, std::span<const double> ladder,
                         double tol = 1e-5) const;

  const RationalFn& rational() const { return rat_; }
  int degree() const { return rat_.degree(); }
  bool holomorphic_on_closed_disk() const { return closed_disk_; }
  bool is_constant() const { return constant_; }
  Complex constant_value() const;
  const std::string& text() const { return text_; }
  double boundary_modulus_max() const { return validation_max_; }

  /// rot(angle) composed after this map.
  Symbol rotated(double angle) const;

  /// sigma_{phi(0)} composed after this map, so the result fixes 0.
  Symbol recentered() const;

  /// Testing hook: same map with the closed-disk extension flag cleared.
  Symbol assume_open_disk_only() const;

 private:
  Symbol() = default;
  void finalize();

  std::string text_;
  RationalFn rat_;
  bool closed_disk_ = true;
  bool constant_ = false;
  Complex constant_value_{0.0, 0.0};
  double validation_max_ = 0.0;
};

std::string format_real(double x);
std::string format_complex(Complex c);

}  // namespace hardycomp
