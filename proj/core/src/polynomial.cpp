#include "hardycomp/polynomial.hpp"

#include <algorithm>

namespace hardycomp {

double poly_max_mag(std::span<const Complex> c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

void poly_trim(Poly& c, double rel) {
  const double cutoff = rel * poly_max_mag(c);
  while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
  if (c.empty()) c.push_back(Complex(0.0));
}

int poly_degree(std::span<const Complex> c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] != Complex(0.0)) return i;
  }
  return 0;
}

Complex poly_eval(std::span<const Complex> c, Complex z) {
  if (c.empty()) return {0.0, 0.0};
  Complex acc = c.back();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    acc = acc * z + c[i];
  }
  return acc;
}

Poly poly_derivative(std::span<const Complex> c) {
  if (c.size() <= 1) return {Complex(0.0)};
  Poly d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
  return d;
}

Poly poly_add(std::span<const Complex> a, std::span<const Complex> b) {
  Poly r(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_sub(std::span<const Complex> a, std::span<const Complex> b) {
  Poly r(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {Complex(0.0)};
  Poly r(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex(0.0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_scale(std::span<const Complex> a, Complex s) {
  Poly r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

Poly poly_deflate(std::span<const Complex> c, Complex root) {
  const int n = static_cast<int>(c.size());
  if (n <= 1) return {Complex(0.0)};
  Poly q(n - 1, Complex(0.0));
  Complex carry = c[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    q[i] = carry;
    carry = c[i] + carry * root;
  }
  return q;
}

}  // namespace hardycomp
