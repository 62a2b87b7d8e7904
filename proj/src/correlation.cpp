#include "gmekit/correlation.hpp"

#include <cmath>
#include <string>

namespace gmekit {

namespace {

constexpr double kImagResidueLimit = 1e-8;

void require_match(const DensityState& rho, const GeneratorBasis& basis) {
  if (rho.dim() != basis.dim())
    throw InvalidArgument("state dimension " + std::to_string(rho.dim()) +
                          " does not match basis dimension " + std::to_string(basis.dim()));
}

double checked_real(Complex z) {
  if (std::abs(z.imag()) > kImagResidueLimit)
    throw NumericalIntegrityError("correlation coefficient has imaginary residue " +
                                  std::to_string(z.imag()));
  return z.real();
}

std::vector<MatrixXcd> local_operators(const GeneratorBasis& basis) {
  std::vector<MatrixXcd> ops;
  ops.reserve(basis.size() + 1);
  for (int i = 0; i <= basis.size(); ++i) ops.push_back(basis.local_operator(i));
  return ops;
}

// tr(X Y) without forming the product.
Complex trace_of_product(const MatrixXcd& x, const MatrixXcd& y) {
  return (x.array() * y.transpose().array()).sum();
}

}  // namespace

CoefficientSet::CoefficientSet(int d, Scaling scaling, std::vector<double> values)
    : d_(d), scaling_(scaling), values_(std::move(values)) {
  if (d < 2) throw InvalidArgument("local dimension must be >= 2");
  const auto expected = static_cast<std::size_t>(ipow(d * d, 3));
  if (values_.size() != expected)
    throw InvalidArgument("coefficient table has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(expected));
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidArgument("coefficient table holds non-finite values");
}

double coefficient(const DensityState& rho, const GeneratorBasis& basis, int f, int g, int h) {
  require_match(rho, basis);
  const int n_ops = basis.size() + 1;
  for (int idx : {f, g, h})
    if (idx < 0 || idx >= n_ops)
      throw InvalidArgument("coefficient index " + std::to_string(idx) + " out of range 0.." +
                            std::to_string(n_ops - 1));
  LocalUnitaryTriple ops{{basis.local_operator(f), basis.local_operator(g), basis.local_operator(h)}};
  return checked_real(trace_of_product(rho.matrix(), ops.kron()));
}

CoefficientSet coefficient_set(const DensityState& rho, const GeneratorBasis& basis) {
  require_match(rho, basis);
  const int d = basis.dim();
  const int d2 = d * d;
  const int n_ops = d2;
  const auto ops = local_operators(basis);
  const MatrixXcd& r = rho.matrix();

  std::vector<double> values(static_cast<std::size_t>(n_ops) * n_ops * n_ops);
  MatrixXcd first(d2, d2);
  MatrixXcd second(d, d);
  for (int f = 0; f < n_ops; ++f) {
    // Contract party 1: sum_{a,a'} A[a',a] rho[(a..),(a'..)].
    first.setZero();
    for (int a = 0; a < d; ++a)
      for (int ap = 0; ap < d; ++ap) {
        const Complex w = ops[f](ap, a);
        if (w != Complex(0.0, 0.0)) first += w * r.block(a * d2, ap * d2, d2, d2);
      }
    for (int g = 0; g < n_ops; ++g) {
      second.setZero();
      for (int b = 0; b < d; ++b)
        for (int bp = 0; bp < d; ++bp) {
          const Complex w = ops[g](bp, b);
          if (w != Complex(0.0, 0.0)) second += w * first.block(b * d, bp * d, d, d);
        }
      for (int h = 0; h < n_ops; ++h)
        values[(static_cast<std::size_t>(f) * n_ops + g) * n_ops + h] =
            checked_real(trace_of_product(second, ops[h]));
    }
  }
  return CoefficientSet(d, basis.scaling(), std::move(values));
}

CorrelationMatrix full_correlation_matrix(const CoefficientSet& coeffs, const GeneratorBasis& basis) {
  if (coeffs.dim() != basis.dim() || coeffs.scaling() != basis.scaling())
    throw InvalidArgument("coefficient table does not match the basis");
  const int n = basis.size();
  CorrelationMatrix m;
  m.d = basis.dim();
  m.scaling = basis.scaling();
  m.kind = CorrelationKind::FullThreeBody;
  m.rows = basis.labels();
  m.cols.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 1; g <= n; ++g)
    for (int h = 1; h <= n; ++h) m.cols.emplace_back(basis.label_of(g), basis.label_of(h));
  m.data.resize(n, n * n);
  for (int f = 1; f <= n; ++f)
    for (int g = 1; g <= n; ++g)
      for (int h = 1; h <= n; ++h) m.data(f - 1, (g - 1) * n + (h - 1)) = coeffs.at(f, g, h);
  return m;
}

CorrelationMatrix full_correlation_matrix(const DensityState& rho, const GeneratorBasis& basis) {
  return full_correlation_matrix(coefficient_set(rho, basis), basis);
}

std::vector<GeneratorLabel> restricted_labels(int d) {
  if (d < 3)
    throw InvalidArgument("the restricted 4x16 unfolding needs d >= 3 (no l_{d-2} for d = 2)");
  std::vector<GeneratorLabel> labels = {
      GeneratorLabel::diagonal(d - 1), GeneratorLabel::diagonal(d - 2),
      GeneratorLabel::symmetric(d - 2, d - 1), GeneratorLabel::antisymmetric(d - 2, d - 1)};
  for (auto& l : labels) l.flat_index = flat_index_for(d, l);
  return labels;
}

CorrelationMatrix restricted_correlation_matrix(const DensityState& rho, const GeneratorBasis& basis) {
  require_match(rho, basis);
  const auto labels = restricted_labels(basis.dim());
  const CoefficientSet coeffs = coefficient_set(rho, basis);

  CorrelationMatrix m;
  m.d = basis.dim();
  m.scaling = basis.scaling();
  m.kind = CorrelationKind::Restricted4x16;
  m.rows = labels;
  m.data.resize(4, 16);
  for (int block = 0; block < 4; ++block)
    for (int inner = 0; inner < 4; ++inner) m.cols.emplace_back(labels[block], labels[inner]);
  for (int row = 0; row < 4; ++row)
    for (int block = 0; block < 4; ++block)
      for (int inner = 0; inner < 4; ++inner)
        m.data(row, block * 4 + inner) =
            coeffs.at(labels[row].flat_index, labels[block].flat_index, labels[inner].flat_index);
  return m;
}

DensityState reconstruct_density(const CoefficientSet& coeffs, const GeneratorBasis& basis) {
  if (coeffs.dim() != basis.dim() || coeffs.scaling() != basis.scaling())
    throw InvalidArgument("coefficient table does not match the basis");
  const int d = basis.dim();
  const int n_ops = d * d;
  std::vector<MatrixXcd> dual = local_operators(basis);
  dual[0] /= static_cast<double>(d);
  for (int i = 1; i < n_ops; ++i) dual[i] /= basis.generator_norm_sq();

  const int dim = ipow(d, 3);
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  MatrixXcd pair(d * d, d * d);
  for (int f = 0; f < n_ops; ++f)
    for (int g = 0; g < n_ops; ++g) {
      MatrixXcd last = MatrixXcd::Zero(d, d);
      for (int h = 0; h < n_ops; ++h) {
        const double t = coeffs.at(f, g, h);
        if (t != 0.0) last += t * dual[h];
      }
      if (last.isZero(0.0)) continue;
      for (int b = 0; b < d; ++b)
        for (int bp = 0; bp < d; ++bp) pair.block(b * d, bp * d, d, d) = dual[g](b, bp) * last;
      for (int a = 0; a < d; ++a)
        for (int ap = 0; ap < d; ++ap)
          rho.block(a * d * d, ap * d * d, d * d, d * d) += dual[f](a, ap) * pair;
    }
  return DensityState(d, std::move(rho));
}

}  // namespace gmekit
