#include "gmekit/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace gmekit {

using nlohmann::json;

namespace {

Complex parse_complex(const json& v, std::string_view what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw InvalidArgument(std::string(what) + ": expected [re, im] pair");
}

json complex_to_json(Complex z) { return json::array({round_sig12(z.real()), round_sig12(z.imag())}); }

int parse_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
    throw InvalidArgument("state file needs \"dims\": [d, d, d]");
  const auto& dims = j["dims"];
  for (const auto& x : dims)
    if (!x.is_number_integer()) throw InvalidArgument("\"dims\" entries must be integers");
  const int d = dims[0].get<int>();
  if (dims[1].get<int>() != d || dims[2].get<int>() != d)
    throw InvalidArgument("only equal local dimensions are supported");
  if (d < 2) throw InvalidArgument("local dimension must be >= 2");
  return d;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int parse_int(std::string_view s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used != s.size()) throw InvalidArgument("bad integer");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad integer '" + std::string(s) + "'");
  }
}

}  // namespace

LoadedState parse_state_json(const json& j, std::string source) {
  if (!j.is_object()) throw InvalidArgument("state file must hold a JSON object");
  const int d = parse_dims(j);
  const int n = ipow(d, 3);
  const bool has_amp = j.contains("amplitudes");
  const bool has_rho = j.contains("density");
  if (has_amp == has_rho)
    throw InvalidArgument("state file needs exactly one of \"amplitudes\" or \"density\"");

  std::string name = j.value("name", std::string{});
  std::vector<std::string> warnings;
  if (has_amp) {
    const auto& a = j["amplitudes"];
    if (!a.is_array() || static_cast<int>(a.size()) != n)
      throw InvalidArgument("\"amplitudes\" must list " + std::to_string(n) + " entries");
    VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = parse_complex(a[i], "amplitudes");
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > 1e-6)
      warnings.push_back("amplitudes had norm " + format_number(norm) + "; normalized");
    return {pure_state(d, v), std::move(source), std::move(name), std::move(warnings)};
  }

  const auto& r = j["density"];
  if (!r.is_array() || static_cast<int>(r.size()) != n)
    throw InvalidArgument("\"density\" must have " + std::to_string(n) + " rows");
  MatrixXcd rho(n, n);
  for (int i = 0; i < n; ++i) {
    if (!r[i].is_array() || static_cast<int>(r[i].size()) != n)
      throw InvalidArgument("\"density\" row " + std::to_string(i) + " must have " + std::to_string(n) +
                            " entries");
    for (int k = 0; k < n; ++k) rho(i, k) = parse_complex(r[i][k], "density");
  }
  // File values may be rounded; validate with the file-level tolerance.
  return {DensityState(d, std::move(rho), 1e-9), std::move(source), std::move(name), std::move(warnings)};
}

std::optional<LoadedState> builtin_state(std::string_view spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string source(spec);
  std::string_view name = spec.substr(prefix.size());

  auto with_dim = [&](std::string_view stem) -> std::optional<int> {
    if (name == stem) return std::nullopt;
    std::string_view rest = name.substr(stem.size());
    if (rest.size() > 1 && rest.front() == ':') return parse_int(rest.substr(1));
    if (rest.size() > 2 && rest.front() == '(' && rest.back() == ')')
      return parse_int(rest.substr(1, rest.size() - 2));
    throw InvalidArgument("unknown built-in state '" + source + "'");
  };

  if (name == "ghz") return LoadedState{pure_state(2, ghz_amplitudes()), source, "ghz", {}};
  if (name == "w") return LoadedState{pure_state(2, w_amplitudes()), source, "w", {}};
  if (name.substr(0, 4) == "gghz") {
    const int d = with_dim("gghz").value_or(3);
    return LoadedState{pure_state(d, gghz_amplitudes(d)), source, "gghz(" + std::to_string(d) + ")", {}};
  }
  if (name.substr(0, 5) == "mixed") {
    const int d = with_dim("mixed").value_or(2);
    return LoadedState{maximally_mixed(d), source, "mixed(" + std::to_string(d) + ")", {}};
  }
  throw InvalidArgument("unknown built-in state '" + source + "' (try ghz, w, gghz:<d>, mixed:<d>)");
}

LoadedState load_state(const std::string& path_or_builtin) {
  if (auto b = builtin_state(path_or_builtin)) return std::move(*b);
  std::ifstream in(path_or_builtin);
  if (!in) throw InvalidArgument("cannot open state file '" + path_or_builtin + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("state file '" + path_or_builtin + "' is not valid JSON: " + e.what());
  }
  try {
    return parse_state_json(j, path_or_builtin);
  } catch (const json::exception& e) {
    throw InvalidArgument("state file '" + path_or_builtin + "': " + e.what());
  }
}

json amplitudes_to_json(int d, const VectorXcd& amplitudes, std::string_view name) {
  json j;
  j["dims"] = {d, d, d};
  if (!name.empty()) j["name"] = std::string(name);
  j["amplitudes"] = json::array();
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) j["amplitudes"].push_back(complex_to_json(amplitudes(i)));
  return j;
}

json density_to_json(const DensityState& rho, std::string_view name) {
  json j;
  const int d = rho.dim();
  j["dims"] = {d, d, d};
  if (!name.empty()) j["name"] = std::string(name);
  j["density"] = json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    j["density"].push_back(std::move(row));
  }
  return j;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

double round_sig12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

json verdict_to_json(const CriterionVerdict& v) {
  return {{"criterion", std::string(to_string(v.criterion))},
          {"norm", round_sig12(v.norm_value)},
          {"threshold", round_sig12(v.threshold)},
          {"margin", round_sig12(v.margin)},
          {"verdict", std::string(to_string(v.verdict))}};
}

json scan_to_json(const BiseparableScanResult& r) {
  json cuts = json::object();
  for (int c = 0; c < 3; ++c)
    cuts[std::string(to_string(static_cast<Bipartition>(c)))] = round_sig12(r.max_pure_by_cut[c]);
  return {{"mode", "bisep"},
          {"criterion", "thm2"},
          {"d", r.d},
          {"samples_pure", r.n_pure},
          {"samples_mixed", r.n_mixed},
          {"max_norm_pure", round_sig12(r.max_pure)},
          {"max_norm_mixed", round_sig12(r.max_mixed)},
          {"max_norm_pure_by_cut", cuts},
          {"max_norm", round_sig12(std::max(r.max_pure, r.max_mixed))},
          {"threshold", round_sig12(r.threshold)},
          {"pass", r.pass}};
}

json report_envelope(bool timestamp) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = std::string(kToolName);
  j["tool_version"] = std::string(kToolVersion);
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    j["generated_at"] = buf;
  } else {
    j["generated_at"] = nullptr;
  }
  return j;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  auto opt = [&](std::optional<double> v) {
    out << ',';
    if (v) out << format_number(*v);
  };
  for (const auto& r : records) {
    out << format_number(r.x) << ',' << format_number(r.norm);
    for (auto id : {CriterionId::Thm1, CriterionId::Thm2, CriterionId::Ref29Bipartite}) {
      auto it = r.margins.find(id);
      opt(it == r.margins.end() ? std::nullopt : std::optional<double>(it->second));
    }
    opt(r.f1);
    opt(r.f2);
    opt(r.f3);
    opt(r.ref38);
    out << '\n';
  }
  return out.str();
}

std::string correlation_csv(const CorrelationMatrix& m) {
  std::ostringstream out;
  out << "row,col_middle,col_last,value\n";
  for (Eigen::Index r = 0; r < m.data.rows(); ++r)
    for (Eigen::Index c = 0; c < m.data.cols(); ++c)
      out << csv_quote(m.rows[r].to_string()) << ',' << csv_quote(m.cols[c].first.to_string()) << ','
          << csv_quote(m.cols[c].second.to_string()) << ',' << format_number(m.data(r, c)) << '\n';
  return out.str();
}

std::string comparison_csv(const ComparisonTable& table) {
  std::ostringstream out;
  out << "name,source,direction,critical_x,note\n";
  for (const auto& e : table.entries)
    out << e.name << ',' << e.source << ',' << to_string(table.direction) << ',' << format_number(e.critical_x)
        << ',' << csv_quote(e.note) << '\n';
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InvalidArgument("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InvalidArgument("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace gmekit
