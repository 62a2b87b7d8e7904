#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "gmekit/correlation.hpp"
#include "gmekit/criteria.hpp"
#include "gmekit/verification.hpp"
#include "test_util.hpp"

using namespace gmekit;

TEST(Schmidt, ProductHasSingleCoefficient) {
  const VectorXcd beta = VectorXcd::Constant(4, 0.5);
  VectorXcd psi = VectorXcd::Zero(8);
  psi.head(4) = beta;  // |0> (x) beta
  const auto s = schmidt_decompose(psi, 2, 4);
  ASSERT_EQ(s.coefficients.size(), 2u);
  EXPECT_NEAR(s.coefficients[0], 1.0, 1e-12);
  EXPECT_NEAR(s.coefficients[1], 0.0, 1e-12);
}

TEST(Schmidt, GhzAndW) {
  const auto g = schmidt_decompose(ghz_amplitudes(), 2, 4);
  EXPECT_NEAR(g.coefficients[0], 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(g.coefficients[1], 1.0 / std::sqrt(2.0), 1e-12);
  const auto w = schmidt_decompose(w_amplitudes(), 2, 4);
  EXPECT_NEAR(w.coefficients[0], std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(w.coefficients[1], std::sqrt(1.0 / 3.0), 1e-12);
}

TEST(Schmidt, RoundTripAndErrors) {
  std::mt19937_64 rng(8);
  for (auto [l, r] : {std::pair{2, 4}, {3, 9}, {9, 3}}) {
    const VectorXcd psi = haar_vector(l * r, rng);
    const auto s = schmidt_decompose(psi, l, r);
    EXPECT_LE((s.reconstruct() - psi).norm(), 1e-10);
    double sum = 0.0;
    for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
      sum += s.coefficients[k] * s.coefficients[k];
      if (k > 0) EXPECT_LE(s.coefficients[k], s.coefficients[k - 1]);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_LE(s.coefficients.size(), static_cast<std::size_t>(std::min(l, r)));
  }
  EXPECT_THROW(schmidt_decompose(2.0 * ghz_amplitudes(), 2, 4), InvalidArgument);
  EXPECT_THROW(schmidt_decompose(ghz_amplitudes(), 3, 3), InvalidArgument);
}

TEST(Schmidt, BiseparableSampleHasRankOneAcrossItsCut) {
  for (int d : {2, 3}) {
    for (auto cut : {Bipartition::A_BC, Bipartition::B_AC, Bipartition::C_AB}) {
      const auto rho = sample_biseparable_pure(d, cut, 123);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho.matrix());
      const VectorXcd psi = es.eigenvectors().col(es.eigenvectors().cols() - 1);
      const auto s = schmidt_decompose(bring_party_first(psi, d, cut), d, d * d);
      EXPECT_NEAR(s.coefficients[0], 1.0, 1e-10);
      for (std::size_t k = 1; k < s.coefficients.size(); ++k) EXPECT_LE(s.coefficients[k], 1e-10);
    }
  }
}

TEST(Oracle, JacobiEigenvalues) {
  MatrixXd a(3, 3);
  a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  const auto ev = jacobi_eigenvalues(a);
  EXPECT_NEAR(ev(0), 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(ev(1), 2.0, 1e-14);
  EXPECT_NEAR(ev(2), 2.0 + std::sqrt(2.0), 1e-14);
}

TEST(Oracle, TraceNormExamples) {
  MatrixXd m = MatrixXd::Zero(2, 2);
  m(0, 0) = 3;
  m(1, 1) = 4;
  EXPECT_NEAR(trace_norm_oracle(m), 7.0, 1e-14);
  const auto basis = GeneratorBasis::build(2, Scaling::PaperScaled);
  const auto t = full_correlation_matrix(pure_state(2, ghz_amplitudes()), basis).data;
  EXPECT_NEAR(trace_norm_oracle(t), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(trace_norm_oracle(MatrixXd::Zero(8, 64)), 0.0);
}

TEST(Oracle, AgreesWithSvdRoute) {
  std::mt19937_64 rng(3);
  for (auto [r, c] : {std::pair{3, 9}, {8, 64}, {9, 3}}) {
    for (int i = 0; i < 50; ++i) {
      const MatrixXd m = gmekit::testing::random_real_matrix(r, c, rng);
      EXPECT_NEAR(trace_norm_oracle(m), trace_norm(m), 1e-9);
    }
  }
}

TEST(CanonicalFormula, Examples) {
  EXPECT_NEAR(canonical_norm_formula(2, CanonicalFamily::DiagPair, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(canonical_norm_formula(2, CanonicalFamily::DiagPair, 1.0 / std::sqrt(2.0)), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(canonical_norm_formula(3, CanonicalFamily::CrossPair, 1.0 / std::sqrt(2.0)),
              3.0 * std::sqrt(21.0) / 2.0, 1e-12);
  EXPECT_THROW(canonical_norm_formula(2, CanonicalFamily::DiagPair, 2.0), InvalidArgument);
  EXPECT_THROW(canonical_norm_formula(2, static_cast<CanonicalFamily>(7), 0.5), InvalidArgument);
}

TEST(CanonicalFormula, MatchesComputedNorms) {
  for (int d = 2; d <= 4; ++d) {
    const auto basis = GeneratorBasis::build(d, Scaling::PaperScaled);
    for (auto fam : {CanonicalFamily::Product, CanonicalFamily::DiagPair, CanonicalFamily::CrossPair})
      for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(full_tensor_norm(canonical_biseparable(d, fam, x), basis), canonical_norm_formula(d, fam, x),
                    1e-9)
            << d << " " << to_string(fam) << " " << x;
      }
  }
}

TEST(CanonicalFormula, SupremumSaturatesThreshold) {
  const auto sup = canonical_family_supremum(2, CanonicalFamily::DiagPair, 201);
  EXPECT_NEAR(sup.argmax_x, 1.0 / std::sqrt(2.0), 0.01);
  EXPECT_LE(sup.max_norm, std::sqrt(3.0) + 1e-9);
  EXPECT_GT(sup.max_norm, std::sqrt(3.0) - 1e-3);
  for (int d = 2; d <= 4; ++d)
    for (auto fam : {CanonicalFamily::DiagPair, CanonicalFamily::CrossPair})
      EXPECT_NEAR(full_tensor_norm(canonical_biseparable(d, fam, 1.0 / std::sqrt(2.0))), thm2_threshold(d), 1e-9);
}

TEST(Scans, LocalUnitaryInvariance) {
  EXPECT_LE(lu_invariance_scan(pure_state(2, ghz_amplitudes()), 100, 7), 1e-8);
  EXPECT_LE(lu_invariance_scan(maximally_mixed(2), 10, 7), 1e-12);
  EXPECT_LE(lu_invariance_scan(pure_state(3, gghz_amplitudes(3)), 50, 7), 1e-8);
  EXPECT_THROW(lu_invariance_scan(maximally_mixed(2), 0, 7), InvalidArgument);
}

TEST(Scans, BiseparableScanSplitsByCut) {
  const auto r = biseparable_bound_scan(2, 600, 60, 7);
  EXPECT_EQ(r.threshold, std::sqrt(3.0));
  // Across 1|23 the bound holds for every sample.
  EXPECT_LE(r.max_pure_by_cut[0], std::sqrt(3.0) + 1e-9);
  // Across 2|13 and 3|12 it does not (the maximum over Haar samples
  // approaches 3).
  EXPECT_GT(r.max_pure_by_cut[1], 2.5);
  EXPECT_GT(r.max_pure_by_cut[2], 2.5);
  EXPECT_FALSE(r.pass);
  EXPECT_THROW(biseparable_bound_scan(2, 0, 1, 7), InvalidArgument);
}

TEST(Scans, ResultIndependentOfWorkerCount) {
  ::setenv("GME_KIT_THREADS", "1", 1);
  const auto a = biseparable_bound_scan(3, 40, 8, 99);
  ::setenv("GME_KIT_THREADS", "5", 1);
  const auto b = biseparable_bound_scan(3, 40, 8, 99);
  ::unsetenv("GME_KIT_THREADS");
  EXPECT_EQ(a.max_pure_by_cut, b.max_pure_by_cut);
  EXPECT_EQ(a.max_mixed, b.max_mixed);
}
