#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmekit/criteria.hpp"
#include "gmekit/states.hpp"

namespace gmekit {

/// Which way a sweep parameter x maps onto the white-noise visibility v:
/// XIsNoise means v = 1 - x, XIsVisibility means v = x.
enum class NoiseDirection { XIsNoise, XIsVisibility };

double to_visibility(double x, NoiseDirection dir);
double from_visibility(double v, NoiseDirection dir);
std::string_view to_string(NoiseDirection dir);

/// The three worked white-noise families (GHZ, W, qutrit GGHZ).
enum class ExampleId { Ex1, Ex2, Ex3 };

/// W-state visibility threshold quoted from the literature; not recomputed.
inline constexpr double kRef38WVisibility = 0.5464;

struct ExampleSetup {
  ExampleId id;
  int d;
  VectorXcd amplitudes;
  NoiseDirection direction;
  std::vector<CriterionId> criteria;
};

ExampleSetup example_setup(ExampleId id);

struct SweepRecord {
  double x = 0.0;
  double norm = 0.0;
  std::map<CriterionId, double> margins;
  // Literature comparison columns, filled only when requested.
  std::optional<double> f1;     // norm - sqrt(3)
  std::optional<double> f2;     // norm - sqrt(6)
  std::optional<double> f3;     // 2 - 2x - sqrt(3), x as noise weight
  std::optional<double> ref38;  // v - 0.5464
};

/// Evenly spaced grid with `steps` points from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int steps);

/// One record per grid point, in grid order. `psi` must be pure.
/// `literature` selects which comparison columns to fill.
std::vector<SweepRecord> sweep(const DensityState& psi, std::span<const double> grid,
                               NoiseDirection dir,
                               std::optional<ExampleId> literature = std::nullopt);

enum class SolveMethod { ClosedForm, Bisection };

struct CriticalPoint {
  CriterionId criterion = CriterionId::Thm1;
  double x_star = 0.0;
  NoiseDirection direction = NoiseDirection::XIsVisibility;
  SolveMethod method = SolveMethod::ClosedForm;
};

/// The pure state is never detected by the criterion at any visibility.
class NoCrossingError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Visibility at which the criterion margin crosses zero for the
/// white-noise family of `psi`. ClosedForm uses v* = threshold / ||T(psi)||;
/// Bisection brackets [0, 1] directly on the margin.
CriticalPoint critical_visibility(const DensityState& psi, CriterionId id,
                                  SolveMethod method = SolveMethod::ClosedForm);

/// Same, reported in the requested parameter direction.
CriticalPoint critical_point(const DensityState& psi, CriterionId id, NoiseDirection dir,
                             SolveMethod method = SolveMethod::ClosedForm);

struct ComparisonEntry {
  std::string name;    // e.g. "thm1", "f2", "ref38"
  std::string source;  // "computed" or "literature"
  double critical_x = 0.0;
  std::string note;
};

struct ComparisonTable {
  ExampleId example;
  NoiseDirection direction;
  std::vector<ComparisonEntry> entries;
};

/// Detection windows of this library's criteria next to the comparison
/// curves and constants quoted for the same example.
ComparisonTable literature_comparisons(ExampleId example);

}  // namespace gmekit
