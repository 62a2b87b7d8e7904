#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmekit/analysis.hpp"
#include "gmekit/correlation.hpp"
#include "gmekit/criteria.hpp"
#include "gmekit/states.hpp"
#include "gmekit/verification.hpp"

namespace gmekit {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolName = "gme-kit";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct LoadedState {
  DensityState state;
  std::string source;
  std::string name;
  std::vector<std::string> warnings;
};

/// Parses the state file schema:
///   {"dims": [d,d,d], "amplitudes": [[re,im], ...]}            or
///   {"dims": [d,d,d], "density": [[[re,im], ...], ...]}
/// plus an optional "name". Amplitudes off unit norm by more than 1e-6 are
/// normalized with a warning. Throws InvalidArgument on schema violations.
LoadedState parse_state_json(const nlohmann::json& j, std::string source);

/// Built-in states addressed as "builtin:<name>": ghz, w, gghz (d = 3),
/// gghz:<d> or gghz(<d>), mixed:<d>.
std::optional<LoadedState> builtin_state(std::string_view spec);

/// A "builtin:" spec or a path to a state JSON file.
LoadedState load_state(const std::string& path_or_builtin);

nlohmann::json amplitudes_to_json(int d, const VectorXcd& amplitudes, std::string_view name = {});
nlohmann::json density_to_json(const DensityState& rho, std::string_view name = {});

/// 12 significant digits, "%.12g".
std::string format_number(double v);
/// The double nearest to format_number(v), so JSON output carries at most
/// 12 significant digits.
double round_sig12(double v);

nlohmann::json verdict_to_json(const CriterionVerdict& v);
nlohmann::json scan_to_json(const BiseparableScanResult& r);

/// Common report envelope: schema_version, tool, tool_version and
/// generated_at (null when `timestamp` is false).
nlohmann::json report_envelope(bool timestamp);

/// Fixed header:
///   x,norm,margin_thm1,margin_thm2,margin_ref29,f1,f2,f3,ref38
/// Missing values are left empty.
std::string sweep_csv(const std::vector<SweepRecord>& records);
inline constexpr std::string_view kSweepCsvHeader =
    "x,norm,margin_thm1,margin_thm2,margin_ref29,f1,f2,f3,ref38";

/// One line per entry: row label, column label pair, value.
std::string correlation_csv(const CorrelationMatrix& m);

std::string comparison_csv(const ComparisonTable& table);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace gmekit
