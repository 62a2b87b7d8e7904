#include "gmekit/criteria.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "gmekit/correlation.hpp"

namespace gmekit {

std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::Thm1: return "thm1";
    case CriterionId::Thm2: return "thm2";
    case CriterionId::Ref29Bipartite: return "ref29";
  }
  return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::GME ? "GME" : "Inconclusive"; }

std::optional<CriterionId> parse_criterion(std::string_view s) {
  if (s == "thm1") return CriterionId::Thm1;
  if (s == "thm2") return CriterionId::Thm2;
  if (s == "ref29") return CriterionId::Ref29Bipartite;
  return std::nullopt;
}

double trace_norm(const MatrixXd& m) {
  if (!m.allFinite()) throw InvalidArgument("trace_norm: matrix has non-finite entries");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  return svd.singularValues().sum();
}

namespace {

void require_dim(int d) {
  if (d < 2) throw InvalidArgument("local dimension must be >= 2, got " + std::to_string(d));
}

}  // namespace

double thm1_threshold() { return std::sqrt(3.0); }

double thm2_threshold(int d) {
  require_dim(d);
  const double dd = d;
  return std::sqrt(dd * dd * dd * (dd - 1.0) * (dd * dd - dd + 1.0) / 8.0);
}

double ref29_threshold(int d) {
  require_dim(d);
  const double dd = d;
  return std::sqrt(dd * dd * dd * (dd * dd - 1.0) * (dd - 1.0) / 4.0);
}

double threshold(CriterionId id, int d) {
  switch (id) {
    case CriterionId::Thm1:
      if (d != 2) throw InvalidArgument("thm1 applies to qubits only (d = 2)");
      return thm1_threshold();
    case CriterionId::Thm2: return thm2_threshold(d);
    case CriterionId::Ref29Bipartite: return ref29_threshold(d);
  }
  throw InvalidArgument("unknown criterion");
}

bool applies(CriterionId id, int d) {
  if (d < 2) return false;
  return id != CriterionId::Thm1 || d == 2;
}

CriterionVerdict verdict_from_norm(CriterionId id, int d, double norm) {
  CriterionVerdict v;
  v.criterion = id;
  v.norm_value = norm;
  v.threshold = threshold(id, d);
  v.margin = norm - v.threshold;
  v.verdict = v.margin > 0.0 ? Verdict::GME : Verdict::Inconclusive;
  return v;
}

double full_tensor_norm(const DensityState& rho, const GeneratorBasis& paper_basis) {
  if (paper_basis.scaling() != Scaling::PaperScaled)
    throw InvalidArgument("criterion norms are defined in the PaperScaled basis");
  return trace_norm(full_correlation_matrix(rho, paper_basis).data);
}

double full_tensor_norm(const DensityState& rho) {
  return full_tensor_norm(rho, GeneratorBasis::build(rho.dim(), Scaling::PaperScaled));
}

CriterionVerdict evaluate(const DensityState& rho, CriterionId id) {
  if (!applies(id, rho.dim()))
    throw InvalidArgument(std::string(to_string(id)) + " does not apply to d = " +
                          std::to_string(rho.dim()));
  return verdict_from_norm(id, rho.dim(), full_tensor_norm(rho));
}

}  // namespace gmekit
