#pragma once

#include <span>
#include <vector>

#include "hardycomp/types.hpp"

namespace hardycomp {

/// Dense polynomial, coefficients in ascending degree order.
using Poly = std::vector<Complex>;

/// Largest coefficient magnitude (0 for the empty polynomial).
double poly_max_mag(std::span<const Complex> c);

/// Drop leading coefficients below rel * max magnitude.
void poly_trim(Poly& c, double rel = 1e-13);

int poly_degree(std::span<const Complex> c);

Complex poly_eval(std::span<const Complex> c, Complex z);

Poly poly_derivative(std::span<const Complex> c);

Poly poly_add(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_sub(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_scale(std::span<const Complex> a, Complex s);

/// Divide by (z - root); remainder is discarded.
Poly poly_deflate(std::span<const Complex> c, Complex root);

}  // namespace hardycomp
