#include "hardycomp/lacunary.hpp"

#include <algorithm>
#include <cmath>

#include "hardycomp/parallel.hpp"
#include "hardycomp/rng.hpp"

namespace hardycomp {

namespace {

constexpr long kScanCap = 1000000;

int nyquist_nodes(const Symbol& phi, int n_max, const QuadratureGrid& grid) {
  const int deg = std::max(1, phi.degree());
  const double need = 4.0 * std::max(1, n_max) * deg;
  return pow2_at_least(need, std::max(64, grid.n_nodes), 1 << 22);
}

Complex int_pow(Complex base, long e) {
  Complex acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// phi^{n_k} sampled over a fresh boundary grid, one row per power.
std::vector<std::vector<Complex>> power_samples(const Symbol& phi,
                                                std::span<const int> powers, int n) {
  std::vector<std::vector<Complex>> rows(powers.size(), std::vector<Complex>(n));
  for (int j = 0; j < n; ++j) {
    const Complex w = phi.boundary_trace(kTwoPi * j / n);
    for (std::size_t k = 0; k < powers.size(); ++k) {
      rows[k][j] = int_pow(w, powers[k]);
    }
  }
  return rows;
}

}  // namespace

GramMatrix gram_matrix(const Symbol& phi, std::span<const int> powers,
                       const QuadratureGrid& grid) {
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] < 0) throw DomainError("powers must be nonnegative");
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      if (powers[i] == powers[j]) throw DomainError("powers must be distinct");
    }
  }
  const int n_max = powers.empty() ? 0 : *std::max_element(powers.begin(), powers.end());
  const int n = nyquist_nodes(phi, n_max, grid);
  const auto rows = power_samples(phi, powers, n);

  const std::size_t k = powers.size();
  GramMatrix g(k, std::vector<Complex>(k, Complex(0.0)));
  for (int j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        g[a][b] += rows[a][j] * std::conj(rows[b][j]);
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      g[a][b] /= static_cast<double>(n);
      g[b][a] = std::conj(g[a][b]);
    }
  }
  return g;
}

LacunaryCertificate select_lacunary_powers(const Symbol& phi, double m_e, int k,
                                           double q, const QuadratureGrid& grid) {
  if (m_e <= 0.0) throw DomainError("lacunary selection requires m(E_phi) > 0");
  if (k < 1) throw DomainError("need at least one power");
  if (q < 1.0) throw DomainError("lacunarity ratio must be >= 1");
  if (phi.is_constant()) throw DomainError("lacunary selection requires a non-constant symbol");

  LacunaryCertificate cert;
  cert.symbol_text = phi.text();
  cert.m_e = m_e;
  cert.powers.push_back(0);

  // Inner products of a candidate power against the selected ones, on a grid
  // refined for the candidate.
  auto cross_products = [&](long cand) {
    std::vector<int> all(cert.powers.begin(), cert.powers.end());
    all.push_back(static_cast<int>(cand));
    const int n = nyquist_nodes(phi, static_cast<int>(cand), grid);
    const auto rows = power_samples(phi, all, n);
    std::vector<Complex> out(cert.powers.size(), Complex(0.0));
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex candv = rows.back()[j];
      diag += std::norm(candv);
      for (std::size_t a = 0; a < cert.powers.size(); ++a) {
        out[a] += candv * std::conj(rows[a][j]);
      }
    }
    for (auto& v : out) v /= static_cast<double>(n);
    diag /= static_cast<double>(n);
    return std::make_pair(out, diag);
  };

  long n = 0;
  while (static_cast<int>(cert.powers.size()) < k) {
    const int stage = static_cast<int>(cert.powers.size()) + 1;  // index of the next power
    const double bound = std::ldexp(1.0, -2 * stage) * m_e;
    bool found = false;
    while (!found) {
      n = std::max(n + 1, static_cast<long>(std::ceil(q * static_cast<double>(n))));
      if (n > kScanCap) {
        double worst = 0.0;
        for (int sel : cert.powers) worst = std::max(worst, static_cast<double>(sel));
        throw NumericError(
            "lacunary scan cap exceeded; m_E may be overestimated or the powers "
            "do not decorrelate (last selected " + std::to_string(static_cast<long>(worst)) + ")");
      }
      const auto [cross, diag] = cross_products(n);
      bool ok = diag >= m_e - 1e-9;
      if (!ok) {
        throw NumericError("diagonal mass fell below m_E; m_E is overestimated");
      }
      for (const Complex& c : cross) {
        if (std::abs(c) > bound) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cert.powers.push_back(static_cast<int>(n));
        found = true;
      }
    }
  }

  cert.gram = gram_matrix(phi, cert.powers, grid);
  cert.grid_nodes = nyquist_nodes(phi, cert.powers.back(), grid);
  cert.q_min = 0.0;
  for (std::size_t i = 0; i + 1 < cert.powers.size(); ++i) {
    if (cert.powers[i] == 0) continue;
    const double r = static_cast<double>(cert.powers[i + 1]) / cert.powers[i];
    cert.q_min = cert.q_min == 0.0 ? r : std::min(cert.q_min, r);
  }
  return cert;
}

TrialStats l2_lower_bound_verify(const Symbol& phi, const LacunaryCertificate& cert,
                                 int trials, std::uint64_t seed, int threads) {
  if (cert.powers.empty()) throw DomainError("certificate carries no powers");
  const int n = nyquist_nodes(phi, cert.powers.back(), QuadratureGrid::uniform(cert.grid_nodes));
  const auto rows = power_samples(phi, cert.powers, n);
  const std::size_t k = cert.powers.size();

  std::vector<double> quot(trials, 0.0);
  parallel_for(trials, threads, [&](std::int64_t t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<Complex> c(k);
    double nrm2 = 0.0;
    for (auto& v : c) {
      v = rng.gaussian();
      nrm2 += std::norm(v);
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& v : c) v *= inv;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < k; ++a) s += c[a] * rows[a][j];
      acc += std::norm(s);
    }
    quot[t] = acc / n;
  });

  TrialStats st;
  st.trials = trials;
  st.seed = seed;
  st.min_quotient = *std::min_element(quot.begin(), quot.end());
  st.max_quotient = *std::max_element(quot.begin(), quot.end());
  return st;
}

double exact_fourth_moment(std::span<const int> powers, std::span<const Complex> c) {
  const std::size_t k = powers.size();
  double total = 0.0;
  for (std::size_t j1 = 0; j1 < k; ++j1) {
    for (std::size_t j2 = 0; j2 < k; ++j2) {
      const long s = static_cast<long>(powers[j1]) + powers[j2];
      Complex inner = 0.0;
      for (std::size_t l1 = 0; l1 < k; ++l1) {
        for (std::size_t l2 = 0; l2 < k; ++l2) {
          if (static_cast<long>(powers[l1]) + powers[l2] != s) continue;
          inner += std::conj(c[l1] * c[l2]);
        }
      }
      total += std::real(c[j1] * c[j2] * inner);
    }
  }
  return total;
}

PaleyStats paley_equivalence_check(std::span<const int> powers, double p, int trials,
                                   std::uint64_t seed, const QuadratureGrid& grid,
                                   int threads) {
  if (powers.size() < 2) throw DomainError("need at least two powers");
  std::vector<int> sorted(powers.begin(), powers.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] > 0 && static_cast<double>(sorted[i + 1]) < 2.0 * sorted[i]) {
      throw DomainError("powers must be lacunary with ratio >= 2");
    }
  }

  const Symbol id = Symbol::identity();
  const int n = nyquist_nodes(id, sorted.back(), grid);
  const auto rows = power_samples(id, sorted, n);
  const std::size_t k = sorted.size();

  std::vector<double> ratio(trials, 0.0), mismatch(trials, 0.0);
  parallel_for(trials, threads, [&](std::int64_t t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<Complex> c(k);
    double nrm2 = 0.0;
    for (auto& v : c) {
      v = rng.gaussian();
      nrm2 += std::norm(v);
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& v : c) v *= inv;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < k; ++a) s += c[a] * rows[a][j];
      acc += std::pow(std::norm(s), 0.5 * p);
    }
    acc /= n;
    ratio[t] = std::pow(acc, 1.0 / p);
    if (p == 4.0) {
      mismatch[t] = std::abs(acc - exact_fourth_moment(sorted, c));
    }
  });

  PaleyStats st;
  st.trials = trials;
  st.seed = seed;
  st.grid_nodes = n;
  st.ratio_min = *std::min_element(ratio.begin(), ratio.end());
  st.ratio_max = *std::max_element(ratio.begin(), ratio.end());
  st.max_p4_mismatch = *std::max_element(mismatch.begin(), mismatch.end());
  return st;
}

TrialStats h1_lower_bound_check(const Symbol& phi, const LacunaryCertificate& cert,
                                int trials, std::uint64_t seed, int threads) {
  if (cert.powers.empty()) throw DomainError("certificate carries no powers");
  const int n = nyquist_nodes(phi, cert.powers.back(), QuadratureGrid::uniform(cert.grid_nodes));
  const auto rows = power_samples(phi, cert.powers, n);
  const std::size_t k = cert.powers.size();

  std::vector<double> ratio(trials, 0.0);
  parallel_for(trials, threads, [&](std::int64_t t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<Complex> c(k);
    double nrm2 = 0.0;
    for (auto& v : c) {
      v = rng.gaussian();
      nrm2 += std::norm(v);
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& v : c) v *= inv;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < k; ++a) s += c[a] * rows[a][j];
      acc += std::abs(s);
    }
    ratio[t] = acc / n;
  });

  TrialStats st;
  st.trials = trials;
  st.seed = seed;
  st.min_quotient = *std::min_element(ratio.begin(), ratio.end());
  st.max_quotient = *std::max_element(ratio.begin(), ratio.end());
  return st;
}

}  // namespace hardycomp
