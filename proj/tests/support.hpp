#pragma once

#include <array>
#include <random>

#include "inference.hpp"
#include "measurement.hpp"

namespace anyonic::testing {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
  const Matrix g = random_complex(rng, n, n);
  Matrix h(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

inline Matrix random_psd(std::mt19937_64& rng, int n) {
  const Matrix g = random_complex(rng, n, n);
  return g * g.adjoint();
}

/// Random normalized state: independent Wishart blocks, quantum trace 1.
inline AnyonicDensityOperator random_state(std::mt19937_64& rng,
                                           std::shared_ptr<const BipartiteBasis> basis) {
  AnyonicDensityOperator rho(std::move(basis));
  for (const Charge c : rho.model().charges()) {
    const int d = rho.basis().block_dim(c);
    if (d > 0) rho.block(c) = random_psd(rng, d);
  }
  const double t = quantum_trace(rho);
  for (const Charge c : rho.model().charges())
    if (!rho.block(c).empty()) rho.block(c) *= Complex(1.0 / t);
  return rho;
}

/// Random state kept safely away from the rank-deficient boundary.
inline AnyonicDensityOperator random_maximal_rank_state(
    std::mt19937_64& rng, std::shared_ptr<const BipartiteBasis> basis, double floor = 0.1) {
  return mix(random_state(rng, std::move(basis)), floor);
}

inline std::array<double, 5> random_prob5(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 5> p{};
  double sum = 0.0;
  for (double& x : p) {
    x = expo(rng) + 1e-6;
    sum += x;
  }
  double acc = 0.0;
  for (size_t k = 0; k < 4; ++k) {
    p[k] /= sum;
    acc += p[k];
  }
  p[4] = 1.0 - acc;  // exact unit sum
  return p;
}

/// Real orthogonal rotation of each sector's traceless generators; the
/// identity slot is untouched, so the result is again a valid observable
/// basis for the same sectors.
inline ObservableBasis rotated_observables(std::mt19937_64& rng, const ObservableBasis& basis) {
  const SectorBasis& sectors = basis.sectors();
  std::vector<std::vector<Matrix>> table(sectors.model().charge_count());
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const Charge a : sectors.sectors()) {
    const int count = basis.count(a);
    auto& list = table[a.index()];
    list.push_back(basis.observable(a, 0));
    const int m = count - 1;
    if (m == 0) continue;
    // Gram-Schmidt of a random real matrix -> orthogonal O.
    std::vector<std::vector<double>> o(m, std::vector<double>(m));
    for (auto& row : o)
      for (double& x : row) x = gauss(rng);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < i; ++k) {
        double dot = 0.0;
        for (int j = 0; j < m; ++j) dot += o[i][j] * o[k][j];
        for (int j = 0; j < m; ++j) o[i][j] -= dot * o[k][j];
      }
      double norm = 0.0;
      for (int j = 0; j < m; ++j) norm += o[i][j] * o[i][j];
      norm = std::sqrt(norm);
      for (int j = 0; j < m; ++j) o[i][j] /= norm;
    }
    const int n = sectors.dim(a);
    for (int i = 0; i < m; ++i) {
      Matrix g(n, n);
      for (int j = 0; j < m; ++j) g += Complex(o[i][j]) * basis.observable(a, j + 1);
      list.push_back(std::move(g));
    }
  }
  return ObservableBasis(basis.sectors_ptr(), std::move(table));
}

}  // namespace anyonic::testing
