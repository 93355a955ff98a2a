#include "hardycomp/boundary_map.hpp"

#include <algorithm>
#include <cmath>

#include "hardycomp/roots.hpp"

namespace hardycomp {

namespace {
constexpr double kCircleSnapTol = 1e-8;

// Reversed-conjugated coefficients: on |z| = 1, conj(P(z)) = z^{-d} Pr(z).
Poly reversed_conjugate(const Poly& p, int d) {
  Poly out(d + 1, Complex(0.0));
  for (int k = 0; k <= d; ++k) {
    const int src = d - k;
    if (src < static_cast<int>(p.size())) out[k] = std::conj(p[src]);
  }
  return out;
}

}  // namespace

std::vector<double> contact_value_angles(const Symbol& phi) {
  if (phi.is_constant()) return {};
  const RationalFn& r = phi.rational();
  const int d = std::max(poly_degree(r.num), poly_degree(r.den));
  if (d > 128) return {};  // heuristic aid only; skip for huge degrees

  // |P|^2 - |Q|^2 = z^{-d} (P Pr - Q Qr) on the circle.
  const Poly s = poly_sub(poly_mul(r.num, reversed_conjugate(r.num, d)),
                          poly_mul(r.den, reversed_conjugate(r.den, d)));
  const double scale = poly_max_mag(r.num) + poly_max_mag(r.den);
  if (poly_max_mag(s) <= 1e-10 * scale * scale) return {};  // inner map

  std::vector<double> angles;
  for (const Complex& z : poly_roots(s)) {
    if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
    const double value_angle =
        wrap_positive(std::arg(r.eval(unit_at(std::arg(z)))));
    bool dup = false;
    for (double a : angles) {
      if (std::abs(wrap_angle(value_angle - a)) < 1e-9) dup = true;
    }
    if (!dup) angles.push_back(value_angle);
  }
  return angles;
}

BoundaryMap::BoundaryMap(const Symbol& phi) {
  const RationalFn& r = phi.rational();
  Poly diff = poly_sub(r.den, r.num);  // 1 - phi = (den - num)/den
  poly_trim(diff);
  den_ = r.den;

  if (poly_degree(diff) == 0) {
    constant_ = true;
    constant_value_ = diff.empty() ? Complex(0.0) : diff[0];
    return;
  }

  lead_ = diff[poly_degree(diff)];
  roots_ = poly_roots(diff);
  root_anchor_.assign(roots_.size(), -1);

  // Snap circle roots to exact angles; cluster them into shared anchors.
  std::vector<double> raw_angles;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (std::abs(std::abs(roots_[i]) - 1.0) < kCircleSnapTol) {
      raw_angles.push_back(wrap_positive(std::arg(roots_[i])));
    }
  }
  std::sort(raw_angles.begin(), raw_angles.end());
  for (double a : raw_angles) {
    if (anchor_angles_.empty() || a - anchor_angles_.back() > 1e-7) {
      anchor_angles_.push_back(a);
    }
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (std::abs(std::abs(roots_[i]) - 1.0) >= kCircleSnapTol) continue;
    const double a = wrap_positive(std::arg(roots_[i]));
    int best = -1;
    double best_dist = 1e300;
    for (std::size_t j = 0; j < anchor_angles_.size(); ++j) {
      const double dist = std::abs(wrap_angle(a - anchor_angles_[j]));
      if (dist < best_dist) {
        best_dist = dist;
        best = static_cast<int>(j);
      }
    }
    root_anchor_[i] = best;
  }
}

Complex BoundaryMap::one_minus(int anchor_idx, double offset) const {
  if (constant_) return constant_value_;
  const double base = anchor_idx >= 0 ? anchor_angles_[anchor_idx] : 0.0;
  const double theta = base + offset;
  // xi to machine precision; the anchored factor below never uses it.
  const Complex xi = anchor_idx >= 0
                         ? unit_at(base) * Complex(std::cos(offset), std::sin(offset))
                         : unit_at(offset);
  Complex prod = lead_;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const int ra = root_anchor_[i];
    if (ra >= 0 && ra == anchor_idx) {
      // e^{i(base+offset)} - e^{i base} = e^{i base} (e^{i offset} - 1)
      const double s = 2.0 * std::sin(0.5 * offset);
      const double m = base + 0.5 * offset;
      prod *= Complex(-s * std::sin(m), s * std::cos(m));
    } else if (ra >= 0) {
      prod *= circle_diff(theta, anchor_angles_[ra]);
    } else {
      prod *= xi - roots_[i];
    }
  }
  const Complex q = poly_eval(den_, xi);
  if (std::abs(q) == 0.0) throw NumericError("denominator zero on the boundary");
  return prod / q;
}

}  // namespace hardycomp
