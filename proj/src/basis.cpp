#include "gmekit/basis.hpp"

#include <cmath>

namespace gmekit {

namespace {

void require_dim(int d) {
  if (d < 2) throw InvalidArgument("local dimension must be >= 2, got " + std::to_string(d));
}

// Position of (j, k), j < k, inside an off-diagonal band ordered by (k, j).
int pair_rank(int j, int k) { return k * (k - 1) / 2 + j; }

}  // namespace

GeneratorLabel GeneratorLabel::diagonal(int m) {
  GeneratorLabel l;
  l.kind = GeneratorKind::Diagonal;
  l.primary_index = m;
  return l;
}

GeneratorLabel GeneratorLabel::symmetric(int j, int k) {
  GeneratorLabel l;
  l.kind = GeneratorKind::Symmetric;
  l.level_pair = {j, k};
  return l;
}

GeneratorLabel GeneratorLabel::antisymmetric(int j, int k) {
  GeneratorLabel l;
  l.kind = GeneratorKind::Antisymmetric;
  l.level_pair = {j, k};
  return l;
}

std::string GeneratorLabel::to_string() const {
  switch (kind) {
    case GeneratorKind::Diagonal:
      return "D" + std::to_string(primary_index);
    case GeneratorKind::Symmetric:
      return "S(" + std::to_string(level_pair.first) + "," + std::to_string(level_pair.second) + ")";
    case GeneratorKind::Antisymmetric:
      return "A(" + std::to_string(level_pair.first) + "," + std::to_string(level_pair.second) + ")";
  }
  return "?";
}

int flat_index_for(int d, const GeneratorLabel& label) {
  require_dim(d);
  const int n_pairs = d * (d - 1) / 2;
  if (label.kind == GeneratorKind::Diagonal) {
    if (label.primary_index < 1 || label.primary_index > d - 1)
      throw InvalidArgument("diagonal generator index out of range: " + label.to_string());
    return label.primary_index;
  }
  const auto [j, k] = label.level_pair;
  if (j < 0 || j >= k || k > d - 1)
    throw InvalidArgument("invalid level pair for d=" + std::to_string(d) + ": " + label.to_string());
  const int band = (label.kind == GeneratorKind::Symmetric) ? 0 : 1;
  return (d - 1) + band * n_pairs + pair_rank(j, k) + 1;
}

GeneratorBasis GeneratorBasis::build(int d, Scaling scaling) {
  require_dim(d);
  GeneratorBasis basis(d, scaling);
  const double s = basis.scale();
  basis.matrices_.reserve(d * d - 1);
  basis.labels_.reserve(d * d - 1);

  auto push = [&](MatrixXcd m, GeneratorLabel label) {
    label.flat_index = static_cast<int>(basis.matrices_.size()) + 1;
    basis.matrices_.push_back(s * m);
    basis.labels_.push_back(label);
  };

  for (int m = 1; m <= d - 1; ++m) {
    MatrixXcd g = MatrixXcd::Zero(d, d);
    for (int a = 0; a < m; ++a) g(a, a) = 1.0;
    g(m, m) = -static_cast<double>(m);
    push(std::sqrt(2.0 / (m * (m + 1.0))) * g, GeneratorLabel::diagonal(m));
  }
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      MatrixXcd g = MatrixXcd::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      push(std::move(g), GeneratorLabel::symmetric(j, k));
    }
  }
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      MatrixXcd g = MatrixXcd::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      push(std::move(g), GeneratorLabel::antisymmetric(j, k));
    }
  }
  return basis;
}

double GeneratorBasis::scale() const {
  return scaling_ == Scaling::PaperScaled ? d_ / 2.0 : 1.0;
}

const MatrixXcd& GeneratorBasis::generator(int flat_index) const {
  return matrices_.at(label_of(flat_index).flat_index - 1);
}

MatrixXcd GeneratorBasis::local_operator(int index) const {
  if (index == 0) return MatrixXcd::Identity(d_, d_);
  return generator(index);
}

const GeneratorLabel& GeneratorBasis::label_of(int flat_index) const {
  if (flat_index < 1 || flat_index > size())
    throw InvalidArgument("generator index " + std::to_string(flat_index) + " out of range 1.." +
                          std::to_string(size()));
  return labels_[flat_index - 1];
}

int GeneratorBasis::flat_index_of(const GeneratorLabel& label) const {
  return flat_index_for(d_, label);
}

MatrixXcd OperatorExpansion::evaluate(const GeneratorBasis& standard_basis) const {
  const int d = standard_basis.dim();
  MatrixXcd out = MatrixXcd::Zero(d, d);
  for (const auto& [index, coeff] : terms) out += coeff * standard_basis.local_operator(index);
  return out;
}

ProjectorIdentities qudit_projector_identities(int d) {
  require_dim(d);
  const double dd = d;
  const int top = flat_index_for(d, GeneratorLabel::diagonal(d - 1));
  const int sym = flat_index_for(d, GeneratorLabel::symmetric(d - 2, d - 1));
  const int anti = flat_index_for(d, GeneratorLabel::antisymmetric(d - 2, d - 1));
  const Complex i(0.0, 1.0);

  ProjectorIdentities p;
  p.d = d;
  p.top_top.terms = {{0, 1.0 / dd}, {top, -std::sqrt(dd * (dd - 1.0) / 2.0) / dd}};
  p.second_second.terms = {{0, 1.0 / dd}, {top, std::sqrt(1.0 / (2.0 * dd * (dd - 1.0)))}};
  if (d > 2) {
    const int second = flat_index_for(d, GeneratorLabel::diagonal(d - 2));
    p.second_second.terms.emplace_back(second, -std::sqrt((dd - 2.0) / (2.0 * (dd - 1.0))));
  }
  p.top_second.terms = {{sym, 0.5}, {anti, -0.5 * i}};
  p.second_top.terms = {{sym, 0.5}, {anti, 0.5 * i}};
  return p;
}

}  // namespace gmekit
