#pragma once

#include <array>
#include <vector>

#include "gmekit/states.hpp"

namespace gmekit {

/// psi = sum_k c_k |l_k>|r_k>, coefficients descending.
struct SchmidtForm {
  std::vector<double> coefficients;
  std::vector<VectorXcd> left_basis;
  std::vector<VectorXcd> right_basis;

  VectorXcd reconstruct() const;
};

/// SVD of the dim_left x dim_right reshaping (row index is the left factor).
/// Throws InvalidArgument if the length mismatches or |psi| deviates from 1
/// by more than 1e-8.
SchmidtForm schmidt_decompose(const VectorXcd& psi, int dim_left, int dim_right);

/// Reorders a tripartite vector so the separated party of `cut` comes first
/// and the remaining two keep their relative order.
VectorXcd bring_party_first(const VectorXcd& psi, int d, Bipartition cut);

/// sum_i sqrt(eig_i(M M^T)) with a cyclic Jacobi eigensolver on the smaller
/// Gram matrix. Independent of the SVD route used by the criteria.
double trace_norm_oracle(const MatrixXd& m);

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending.
VectorXd jacobi_eigenvalues(MatrixXd a);

/// Closed-form full-tensor trace norm of canonical_biseparable(d, family, x):
/// sqrt(1 + 8x^2y^2) for d = 2, else (d^2 sqrt(d-1) / (2 sqrt 2))
/// sqrt(1/d + d - 2 + 4x^2y^2). Product is the x = 1 member.
double canonical_norm_formula(int d, CanonicalFamily family, double x);

struct SupremumResult {
  double max_norm = 0.0;
  double argmax_x = 0.0;
};

/// Largest computed norm over an evenly spaced x-grid of `points` values.
SupremumResult canonical_family_supremum(int d, CanonicalFamily family, int points);

/// max_i | ||T(rho)|| - ||T(U_i rho U_i^dagger)|| | over Haar local triples.
double lu_invariance_scan(const DensityState& rho, int n_trials, Seed seed);

struct BiseparableScanResult {
  int d = 0;
  long n_pure = 0;
  long n_mixed = 0;
  Seed seed = 0;
  double threshold = 0.0;
  double max_pure = 0.0;
  double max_mixed = 0.0;
  // Pure-sample maxima split by which party was separated (1|23, 2|13, 3|12).
  std::array<double, 3> max_pure_by_cut{};
  bool pass = false;
};

/// Samples n_pure biseparable pure states (cuts cycle 1|23, 2|13, 3|12)
/// and n_mixed mixtures of 2..8 components, and reports the largest
/// full-tensor norms against the Thm2 threshold for d. PASS iff both maxima
/// are <= threshold + 1e-9. Sample i always uses the same derived seed, so
/// the result does not depend on the worker count.
BiseparableScanResult biseparable_bound_scan(int d, long n_pure, long n_mixed, Seed seed);

/// Worker count for scans: GME_KIT_THREADS if set and positive, otherwise
/// the hardware concurrency.
int scan_threads();

}  // namespace gmekit
