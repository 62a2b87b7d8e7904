#pragma once

#include <utility>
#include <vector>

#include "gmekit/basis.hpp"
#include "gmekit/states.hpp"

namespace gmekit {

enum class CorrelationKind { FullThreeBody, Restricted4x16 };

/// Real matrix unfolding of three-body correlation coefficients
/// t_{f,g,h} = tr(rho l_f (x) l_g (x) l_h). Row f is the first party; the
/// column of (g, h) is (g-1)(d^2-1) + (h-1) in the full unfolding.
struct CorrelationMatrix {
  int d = 0;
  Scaling scaling = Scaling::PaperScaled;
  CorrelationKind kind = CorrelationKind::FullThreeBody;
  std::vector<GeneratorLabel> rows;
  std::vector<std::pair<GeneratorLabel, GeneratorLabel>> cols;
  MatrixXd data;
};

/// Complete coefficient table t_{f,g,h}, f,g,h in 0..d^2-1 with index 0 the
/// unscaled identity, so t_{0,0,0} = tr rho = 1 in every scaling.
class CoefficientSet {
 public:
  /// `values` is row-major over (f, g, h). Throws InvalidArgument when the
  /// table is incomplete or holds non-finite values.
  CoefficientSet(int d, Scaling scaling, std::vector<double> values);

  int dim() const { return d_; }
  Scaling scaling() const { return scaling_; }
  /// Operators per party, d^2.
  int ops() const { return d_ * d_; }
  double at(int f, int g, int h) const { return values_[(f * ops() + g) * ops() + h]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int d_;
  Scaling scaling_;
  std::vector<double> values_;
};

/// Single coefficient by direct trace against the Kronecker product.
/// Indices are 0..d^2-1 (0 = identity). Throws NumericalIntegrityError when
/// the imaginary residue exceeds 1e-8.
double coefficient(const DensityState& rho, const GeneratorBasis& basis, int f, int g, int h);

/// All d^6 coefficients by sequential single-party contraction.
CoefficientSet coefficient_set(const DensityState& rho, const GeneratorBasis& basis);

/// The (d^2-1) x (d^2-1)^2 unfolding of all non-identity coefficients.
CorrelationMatrix full_correlation_matrix(const DensityState& rho, const GeneratorBasis& basis);
CorrelationMatrix full_correlation_matrix(const CoefficientSet& coeffs, const GeneratorBasis& basis);

/// The four-generator sub-unfolding (blocks A1..A4) on levels d-1, d-2.
/// Row and inner-column order: D(d-1), D(d-2), S(d-2,d-1), A(d-2,d-1);
/// the middle label selects the block. Rejects d = 2.
CorrelationMatrix restricted_correlation_matrix(const DensityState& rho, const GeneratorBasis& basis);

/// The four labels spanning the restricted unfolding, in row order.
std::vector<GeneratorLabel> restricted_labels(int d);

/// rho = sum t_{fgh} l*_f (x) l*_g (x) l*_h with dual operators
/// l*_0 = 1/d and l*_m = l_m / tr(l_m^2).
DensityState reconstruct_density(const CoefficientSet& coeffs, const GeneratorBasis& basis);

}  // namespace gmekit
