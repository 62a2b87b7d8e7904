#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmekit/common.hpp"

namespace gmekit {

/// Normalization of the su(d) generators.
///
/// Standard:    tr(l_m l_n) = 2 delta_mn (Gell-Mann / Pauli normalization).
/// PaperScaled: (d/2) * Standard, so tr(l_m l_n) = (d^2/2) delta_mn. This is
///              the scaling under which the GME thresholds are stated; all
///              criterion computations use it. For d = 2 both coincide.
enum class Scaling { Standard, PaperScaled };

enum class GeneratorKind { Diagonal, Symmetric, Antisymmetric };

/// Identifies one generator. Diagonal generators carry `primary_index`
/// m in 1..d-1; off-diagonal ones carry the level pair (j, k) with j < k.
/// `flat_index` is the 1-based position in the three-band ordering:
/// diagonals, then symmetric |k><j| + |j><k|, then antisymmetric
/// -i(|j><k| - |k><j|), each off-diagonal band ordered by (k, j).
struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::Diagonal;
  int primary_index = 0;
  std::pair<int, int> level_pair{0, 0};
  int flat_index = 0;

  static GeneratorLabel diagonal(int m);
  static GeneratorLabel symmetric(int j, int k);
  static GeneratorLabel antisymmetric(int j, int k);

  // Compact text form: "D2", "S(0,1)", "A(1,2)".
  std::string to_string() const;

  friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) {
    return a.kind == b.kind && a.primary_index == b.primary_index &&
           a.level_pair == b.level_pair;
  }
};

/// The ordered d^2 - 1 traceless Hermitian generators of su(d).
/// Immutable after construction.
class GeneratorBasis {
 public:
  /// Throws InvalidArgument for d < 2.
  static GeneratorBasis build(int d, Scaling scaling);

  int dim() const { return d_; }
  Scaling scaling() const { return scaling_; }
  /// Number of generators, d^2 - 1.
  int size() const { return static_cast<int>(matrices_.size()); }
  /// Multiplier relative to the Standard normalization (1 or d/2).
  double scale() const;
  /// tr(l_m l_m) for every generator in this basis.
  double generator_norm_sq() const { return 2.0 * scale() * scale(); }

  /// Generator by 1-based flat index.
  const MatrixXcd& generator(int flat_index) const;
  /// Local operator by index 0..d^2-1, where 0 is the (unscaled) identity.
  MatrixXcd local_operator(int index) const;
  const std::vector<MatrixXcd>& generators() const { return matrices_; }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }

  const GeneratorLabel& label_of(int flat_index) const;
  /// Throws InvalidArgument when the label does not exist for this d.
  int flat_index_of(const GeneratorLabel& label) const;

 private:
  GeneratorBasis(int d, Scaling scaling) : d_(d), scaling_(scaling) {}

  int d_;
  Scaling scaling_;
  std::vector<MatrixXcd> matrices_;
  std::vector<GeneratorLabel> labels_;
};

// Flat index from a label without materializing a basis.
int flat_index_for(int d, const GeneratorLabel& label);

/// A local operator written as sum_i c_i * op_i, where op index 0 is the
/// identity and other indices are Standard-basis flat indices.
struct OperatorExpansion {
  std::vector<std::pair<int, Complex>> terms;
  MatrixXcd evaluate(const GeneratorBasis& standard_basis) const;
};

/// Expansions of the projectors and transition operators on the two highest
/// levels (d-1 and d-2) in {1, l_{d-1}, l_{d-2}, S(d-2,d-1), A(d-2,d-1)}.
/// For d = 2 there is no l_{d-2}; its coefficient vanishes and is omitted.
struct ProjectorIdentities {
  int d = 0;
  OperatorExpansion top_top;        // |d-1><d-1|
  OperatorExpansion second_second;  // |d-2><d-2|
  OperatorExpansion top_second;     // |d-1><d-2|
  OperatorExpansion second_top;     // |d-2><d-1|
};

ProjectorIdentities qudit_projector_identities(int d);

}  // namespace gmekit
