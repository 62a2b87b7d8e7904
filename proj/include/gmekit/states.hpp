#pragma once

#include <array>
#include <random>
#include <string_view>

#include "gmekit/common.hpp"

namespace gmekit {

inline constexpr double kDefaultStateTolerance = 1e-10;

/// A validated tripartite density matrix on (C^d)^{\otimes 3}.
///
/// Basis ordering is |a b c> -> a*d^2 + b*d + c (party 1 most significant).
/// Construction checks Hermiticity, unit trace and positivity (smallest
/// eigenvalue >= -tolerance) and throws InvalidArgument on violation.
class DensityState {
 public:
  DensityState(int d, MatrixXcd rho, double tolerance = kDefaultStateTolerance,
               bool purity_hint = false);

  int dim() const { return d_; }
  int hilbert_dim() const { return static_cast<int>(rho_.rows()); }
  const MatrixXcd& matrix() const { return rho_; }
  double tolerance() const { return tolerance_; }
  bool purity_hint() const { return purity_hint_; }
  double purity() const;

 private:
  int d_;
  MatrixXcd rho_;
  double tolerance_;
  bool purity_hint_;
};

/// Separated party of a biseparable pure state.
enum class Bipartition { A_BC, B_AC, C_AB };

std::string_view to_string(Bipartition p);

struct LocalUnitaryTriple {
  std::array<MatrixXcd, 3> u;

  static LocalUnitaryTriple identity(int d);
  /// U1 (x) U2 (x) U3.
  MatrixXcd kron() const;
};

enum class CanonicalFamily { Product, DiagPair, CrossPair };

std::string_view to_string(CanonicalFamily f);

// ---- named vectors --------------------------------------------------------

/// (|000> + |111>)/sqrt(2).
VectorXcd ghz_amplitudes();
/// (|001> + |010> + |100>)/sqrt(3).
VectorXcd w_amplitudes();
/// (1/sqrt(d)) sum_i |iii>.
VectorXcd gghz_amplitudes(int d);
/// Computational basis vector |a b c>.
VectorXcd basis_ket(int d, int a, int b, int c);

// ---- constructors ---------------------------------------------------------

/// Rank-1 projector onto the normalized amplitudes. Throws for zero or
/// wrongly sized input.
DensityState pure_state(int d, const VectorXcd& amplitudes);

DensityState maximally_mixed(int d);

/// (1 - v) 1/d^3 + v |psi><psi| for a pure input.
DensityState white_noise_mix(const DensityState& psi, double visibility);

/// |d-1> (x) |a> with |a> = |d-1,d-1> (Product), x|d-1,d-1> + y|d-2,d-2>
/// (DiagPair) or x|d-1,d-2> + y|d-2,d-1> (CrossPair), y = sqrt(1 - x^2).
/// `x` is ignored for Product.
DensityState canonical_biseparable(int d, CanonicalFamily family, double x);

/// |alpha><alpha| (x) |beta><beta| split across `partition`, both factors
/// Haar-uniform. Deterministic in `seed`.
DensityState sample_biseparable_pure(int d, Bipartition partition, Seed seed);

/// Dirichlet(1,...,1)-weighted mixture of `n_components` pure biseparable
/// samples with independently drawn partitions.
DensityState sample_biseparable_mixed(int d, int n_components, Seed seed);

/// (U1 (x) U2 (x) U3) rho (U1 (x) U2 (x) U3)^dagger. Throws when a factor
/// is not unitary within 1e-10 or dimensions disagree.
DensityState apply_local_unitary(const DensityState& rho, const LocalUnitaryTriple& u);

/// Three independent Haar unitaries.
LocalUnitaryTriple random_local_unitary(int d, Seed seed);

// ---- sampling primitives --------------------------------------------------

/// Haar unitary via QR of a complex Ginibre matrix with the phases of R's
/// diagonal absorbed into Q.
MatrixXcd haar_unitary(int n, std::mt19937_64& rng);

/// Uniformly random unit vector in C^n.
VectorXcd haar_vector(int n, std::mt19937_64& rng);

}  // namespace gmekit
