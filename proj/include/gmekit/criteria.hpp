#pragma once

#include <optional>
#include <string_view>

#include "gmekit/basis.hpp"
#include "gmekit/states.hpp"

namespace gmekit {

/// Thm1: tri-qubit bound sqrt(3). Thm2: qudit bound
/// sqrt(d^3 (d-1)(d^2-d+1)/8). Ref29Bipartite: the separable-bipartite
/// comparison bound sqrt(d^3 (d^2-1)(d-1)/4) applied to the same norm.
enum class CriterionId { Thm1, Thm2, Ref29Bipartite };

/// The criteria are sufficient conditions only, so there is no
/// "biseparable" outcome.
enum class Verdict { GME, Inconclusive };

struct CriterionVerdict {
  CriterionId criterion = CriterionId::Thm1;
  double norm_value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // norm_value - threshold
  Verdict verdict = Verdict::Inconclusive;
};

std::string_view to_string(CriterionId id);
std::string_view to_string(Verdict v);
/// Accepts "thm1", "thm2", "ref29". Returns nullopt otherwise.
std::optional<CriterionId> parse_criterion(std::string_view s);

/// Sum of singular values (SVD route). Throws InvalidArgument on
/// non-finite input.
double trace_norm(const MatrixXd& m);

double thm1_threshold();
double thm2_threshold(int d);
double ref29_threshold(int d);
double threshold(CriterionId id, int d);

/// Whether `id` is defined for local dimension d (Thm1 needs d = 2).
bool applies(CriterionId id, int d);

/// Strict comparison: margin == 0 is Inconclusive.
CriterionVerdict verdict_from_norm(CriterionId id, int d, double norm);

/// Trace norm of the full three-body correlation matrix in the
/// PaperScaled basis.
double full_tensor_norm(const DensityState& rho);
double full_tensor_norm(const DensityState& rho, const GeneratorBasis& paper_basis);

/// Throws InvalidArgument when the criterion does not apply to rho's d.
CriterionVerdict evaluate(const DensityState& rho, CriterionId id);

}  // namespace gmekit
