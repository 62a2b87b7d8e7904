#pragma once

#include <cmath>
#include <random>

#include "gmekit/states.hpp"

namespace gmekit::testing {

inline double max_abs_diff(const MatrixXcd& a, const MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Random full-rank mixed state: normalized G G^dagger with G complex Gaussian.
inline DensityState random_mixed_state(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int n = ipow(d, 3);
  MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityState(d, rho);
}

inline MatrixXd random_real_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

}  // namespace gmekit::testing
