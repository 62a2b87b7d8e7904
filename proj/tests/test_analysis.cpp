#include <cmath>

#include <gtest/gtest.h>

#include "gmekit/analysis.hpp"

using namespace gmekit;

namespace {

const double kSqrt2 = std::sqrt(2.0), kSqrt3 = std::sqrt(3.0), kSqrt6 = std::sqrt(6.0);
const double kWNorm = (4.0 * kSqrt2 + std::sqrt(17.0)) / 3.0;
const double kGghzNorm = (27.0 * kSqrt2 + 3.0 * kSqrt6) / 2.0;

DensityState ghz() { return pure_state(2, ghz_amplitudes()); }

}  // namespace

TEST(Analysis, LinearGrid) {
  const auto g = linear_grid(0.0, 1.0, 101);
  ASSERT_EQ(g.size(), 101u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[38], 0.38, 1e-15);
  EXPECT_EQ(linear_grid(0.25, 1.0, 1), std::vector<double>{0.25});
  EXPECT_THROW(linear_grid(0.0, 1.0, 0), InvalidArgument);
}

TEST(Analysis, GhzSweepFollowsClosedForm) {
  const auto grid = linear_grid(0.0, 1.0, 101);
  const auto rows = sweep(ghz(), grid, NoiseDirection::XIsNoise, ExampleId::Ex1);
  ASSERT_EQ(rows.size(), grid.size());
  for (const auto& r : rows) {
    ASSERT_TRUE(r.f1 && r.f2 && r.f3);
    EXPECT_NEAR(r.norm, 2.0 * kSqrt2 * (1.0 - r.x), 1e-9);
    EXPECT_NEAR(*r.f1, 2.0 * kSqrt2 * (1.0 - r.x) - kSqrt3, 1e-9);
    EXPECT_NEAR(*r.f2, 2.0 * kSqrt2 * (1.0 - r.x) - kSqrt6, 1e-9);
    EXPECT_NEAR(*r.f3, 2.0 - 2.0 * r.x - kSqrt3, 1e-15);
    EXPECT_NEAR(r.margins.at(CriterionId::Thm1), *r.f1, 1e-12);
    EXPECT_FALSE(r.ref38.has_value());
  }
  EXPECT_NEAR(*rows.front().f1, 1.0964, 1e-4);
  EXPECT_NEAR(rows.back().norm, 0.0, 1e-12);
  EXPECT_NEAR(*rows.back().f1, -kSqrt3, 1e-12);
}

TEST(Analysis, WSweepInVisibilityForm) {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const auto rows = sweep(pure_state(2, w_amplitudes()), grid, NoiseDirection::XIsVisibility, ExampleId::Ex2);
  EXPECT_NEAR(rows[2].norm, kWNorm, 1e-12);
  EXPECT_NEAR(rows[1].norm, kWNorm / 2.0, 1e-12);
  EXPECT_NEAR(*rows[2].ref38, 1.0 - kRef38WVisibility, 1e-15);
}

TEST(Analysis, SweepMarginsPerDimension) {
  const std::vector<double> grid{0.2};
  const auto q = sweep(pure_state(3, gghz_amplitudes(3)), grid, NoiseDirection::XIsNoise);
  EXPECT_EQ(q[0].margins.count(CriterionId::Thm1), 0u);
  EXPECT_NEAR(q[0].margins.at(CriterionId::Thm2), kGghzNorm * 0.8 - thm2_threshold(3), 1e-9);
  EXPECT_NEAR(q[0].margins.at(CriterionId::Ref29Bipartite), kGghzNorm * 0.8 - ref29_threshold(3), 1e-9);
  EXPECT_FALSE(q[0].f1.has_value());
}

TEST(Analysis, SweepErrors) {
  EXPECT_THROW(sweep(ghz(), std::vector<double>{}, NoiseDirection::XIsNoise), InvalidArgument);
  EXPECT_THROW(sweep(ghz(), std::vector<double>{0.5, 1.2}, NoiseDirection::XIsNoise), InvalidArgument);
  EXPECT_THROW(sweep(maximally_mixed(2), std::vector<double>{0.5}, NoiseDirection::XIsNoise), InvalidArgument);
}

TEST(Analysis, SweepIsBitReproducible) {
  const auto grid = linear_grid(0.0, 1.0, 37);
  const auto psi = pure_state(3, gghz_amplitudes(3));
  const auto a = sweep(psi, grid, NoiseDirection::XIsNoise);
  const auto b = sweep(psi, grid, NoiseDirection::XIsNoise);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].norm, b[i].norm);
    EXPECT_EQ(a[i].margins, b[i].margins);
  }
}

TEST(Analysis, CriticalPointsOfWorkedExamples) {
  const auto g = ghz();
  EXPECT_NEAR(critical_point(g, CriterionId::Thm1, NoiseDirection::XIsNoise).x_star, 1.0 - kSqrt6 / 4.0, 1e-12);
  EXPECT_NEAR(1.0 - kSqrt6 / 4.0, 0.3876275, 1e-7);

  const auto w = pure_state(2, w_amplitudes());
  const double w_star = 3.0 * kSqrt3 / (4.0 * kSqrt2 + std::sqrt(17.0));
  EXPECT_NEAR(critical_visibility(w, CriterionId::Thm1).x_star, w_star, 1e-12);
  EXPECT_NEAR(w_star, 0.5313061, 1e-7);

  const auto q = pure_state(3, gghz_amplitudes(3));
  const double thm2_star = 1.0 - std::sqrt(21.0) / (9.0 * kSqrt2 + kSqrt6);
  const double ref29_star = 1.0 - 6.0 * kSqrt3 / kGghzNorm;
  EXPECT_NEAR(critical_point(q, CriterionId::Thm2, NoiseDirection::XIsNoise).x_star, thm2_star, 1e-12);
  EXPECT_NEAR(critical_point(q, CriterionId::Ref29Bipartite, NoiseDirection::XIsNoise).x_star, ref29_star, 1e-12);
  EXPECT_NEAR(thm2_star, 0.69806, 1e-5);
  EXPECT_NEAR(ref29_star, 0.54347, 1e-4);
}

TEST(Analysis, BisectionAgreesWithClosedForm) {
  struct Case {
    DensityState psi;
    CriterionId id;
  };
  const std::vector<Case> cases = {{ghz(), CriterionId::Thm1},
                                   {ghz(), CriterionId::Ref29Bipartite},
                                   {pure_state(2, w_amplitudes()), CriterionId::Thm1},
                                   {pure_state(3, gghz_amplitudes(3)), CriterionId::Thm2},
                                   {pure_state(3, gghz_amplitudes(3)), CriterionId::Ref29Bipartite}};
  for (const auto& c : cases) {
    const auto closed = critical_visibility(c.psi, c.id, SolveMethod::ClosedForm);
    const auto bisect = critical_visibility(c.psi, c.id, SolveMethod::Bisection);
    EXPECT_EQ(bisect.method, SolveMethod::Bisection);
    EXPECT_NEAR(closed.x_star, bisect.x_star, 1e-8) << to_string(c.id);
    const double margin =
        full_tensor_norm(white_noise_mix(c.psi, bisect.x_star)) - threshold(c.id, c.psi.dim());
    EXPECT_NEAR(margin, 0.0, 1e-9);
  }
}

TEST(Analysis, NoCrossingForUndetectableStates) {
  EXPECT_THROW(critical_visibility(pure_state(2, basis_ket(2, 0, 0, 0)), CriterionId::Thm1), NoCrossingError);
  EXPECT_THROW(critical_visibility(canonical_biseparable(3, CanonicalFamily::DiagPair, 0.5),
                                   CriterionId::Thm2, SolveMethod::Bisection),
               NoCrossingError);
}

TEST(Analysis, LiteratureTables) {
  const auto ex1 = literature_comparisons(ExampleId::Ex1);
  ASSERT_EQ(ex1.entries.size(), 3u);
  EXPECT_EQ(ex1.entries[1].name, "f2");
  EXPECT_NEAR(ex1.entries[1].critical_x, 1.0 - kSqrt3 / 2.0, 1e-12);
  EXPECT_NEAR(ex1.entries[1].critical_x, 0.1339746, 1e-7);
  EXPECT_EQ(ex1.entries[2].name, "f3");
  EXPECT_NEAR(ex1.entries[2].critical_x, 0.134, 1e-3);
  // The criterion's detection window strictly contains the comparison window.
  EXPECT_GT(ex1.entries[0].critical_x, ex1.entries[1].critical_x);

  const auto ex2 = literature_comparisons(ExampleId::Ex2);
  EXPECT_EQ(ex2.direction, NoiseDirection::XIsVisibility);
  EXPECT_EQ(ex2.entries[1].critical_x, 0.5464);
  EXPECT_LT(ex2.entries[0].critical_x, ex2.entries[1].critical_x);

  const auto ex3 = literature_comparisons(ExampleId::Ex3);
  EXPECT_GT(ex3.entries[0].critical_x, ex3.entries[1].critical_x);
}
