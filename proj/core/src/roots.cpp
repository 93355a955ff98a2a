#include "hardycomp/roots.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace hardycomp {

namespace {

// Parlett-Reinsch balancing with powers of two, so eigenvalues are untouched.
void balance_in_place(Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  bool done = false;
  for (int sweep = 0; sweep < 16 && !done; ++sweep) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        col += std::abs(m(k, i));
        row += std::abs(m(i, k));
      }
      if (col == 0.0 || row == 0.0) continue;
      const double s = col + row;
      double f = 1.0;
      while (col < row / 2.0) {
        f *= 2.0;
        col *= 4.0;
      }
      while (col > row * 2.0) {
        f /= 2.0;
        col /= 4.0;
      }
      if (f != 1.0 && (col + row) / f < 0.95 * s) {
        done = false;
        m.col(i) *= f;
        m.row(i) /= f;
      }
    }
  }
}

Complex newton_step(const Poly& c, const Poly& d, Complex z) {
  const Complex fz = poly_eval(c, z);
  const Complex dz = poly_eval(d, z);
  if (std::abs(dz) == 0.0) return z;
  return z - fz / dz;
}

}  // namespace

std::vector<Complex> poly_roots(const Poly& coeffs) {
  Poly c = coeffs;
  poly_trim(c, 5e-15);
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  if (deg == 1) return {-c[0] / c[1]};
  if (deg == 2) {
    const Complex a = c[2], b = c[1], k = c[0];
    Complex sq = std::sqrt(b * b - 4.0 * a * k);
    // Pick the sign giving the larger magnitude to avoid cancellation.
    if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
    const Complex q = -0.5 * (b + sq);
    std::vector<Complex> r;
    r.push_back(q / a);
    r.push_back(std::abs(q) > 0.0 ? k / q : Complex(0.0));
    const Poly d = poly_derivative(c);
    for (auto& z : r)
      for (int it = 0; it < 3; ++it) z = newton_step(c, d, z);
    return r;
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -c[i] / c[deg];
  balance_in_place(m);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericError("companion eigenvalue iteration failed");
  }

  const Poly d = poly_derivative(c);
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) {
    Complex z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) z = newton_step(c, d, z);
    roots[i] = z;
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(std::vector<Complex> roots, double radius) {
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - sum / static_cast<double>(count)) <= radius) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

}  // namespace hardycomp
