#include "gmekit/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gmekit/io.hpp"

namespace gmekit::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;
};

Grid parse_grid(const std::string& spec) {
  Grid g;
  std::istringstream in(spec);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) || a.empty() ||
      b.empty() || c.empty())
    throw InvalidArgument("grid must look like start:stop:steps, got '" + spec + "'");
  try {
    std::size_t ua = 0, ub = 0, uc = 0;
    g.start = std::stod(a, &ua);
    g.stop = std::stod(b, &ub);
    g.steps = std::stoi(c, &uc);
    if (ua != a.size() || ub != b.size() || uc != c.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw InvalidArgument("grid must look like start:stop:steps, got '" + spec + "'");
  }
  if (g.steps < 1) throw InvalidArgument("grid needs at least one step");
  return g;
}

void emit(const std::string& out_path, const std::string& contents, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << contents;
  } else {
    write_file_atomic(out_path, contents);
  }
}

void report_warnings(const LoadedState& s, std::ostream& err) {
  for (const auto& w : s.warnings) err << "warning: " << s.source << ": " << w << '\n';
}

json input_descriptor(const LoadedState& s) {
  return {{"source", s.source}, {"name", s.name}, {"d", s.state.dim()}};
}

// ---- check ---------------------------------------------------------------

struct CheckOptions {
  std::string state;
  std::string criterion = "all";
  std::string out;
  bool no_timestamp = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedState s = load_state(o.state);
  report_warnings(s, err);
  const int d = s.state.dim();

  std::vector<CriterionId> ids;
  if (o.criterion == "all") {
    for (auto id : {CriterionId::Thm1, CriterionId::Thm2, CriterionId::Ref29Bipartite})
      if (applies(id, d)) ids.push_back(id);
  } else {
    const auto id = parse_criterion(o.criterion);
    if (!id) throw InvalidArgument("unknown criterion '" + o.criterion + "'");
    ids.push_back(*id);
  }

  const double norm = full_tensor_norm(s.state);
  json report = report_envelope(!o.no_timestamp);
  report["command"] = "check";
  report["input"] = input_descriptor(s);
  report["seeds"] = json::array();
  report["verdicts"] = json::array();
  for (auto id : ids) {
    if (!applies(id, d))
      throw InvalidArgument(std::string(to_string(id)) + " does not apply to d = " + std::to_string(d));
    const auto v = verdict_from_norm(id, d, norm);
    report["verdicts"].push_back(verdict_to_json(v));
    err << to_string(id) << ": norm " << format_number(v.norm_value) << " threshold "
        << format_number(v.threshold) << " -> " << to_string(v.verdict) << '\n';
  }
  emit(o.out, report.dump(2) + "\n", out);
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepOptions {
  std::string state;
  std::string grid = "0:1:101";
  std::string direction = "visibility";
  bool with_literature = false;
  std::string out;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const Grid g = parse_grid(o.grid);
  const NoiseDirection dir = o.direction == "noise" ? NoiseDirection::XIsNoise : NoiseDirection::XIsVisibility;
  const LoadedState s = load_state(o.state);
  report_warnings(s, err);

  std::optional<ExampleId> literature;
  if (o.with_literature) {
    if (s.state.dim() != 2) throw InvalidArgument("literature columns exist only for qubit states");
    literature = dir == NoiseDirection::XIsNoise ? ExampleId::Ex1 : ExampleId::Ex2;
  }
  const auto grid = linear_grid(g.start, g.stop, g.steps);
  emit(o.out, sweep_csv(sweep(s.state, grid, dir, literature)), out);
  return kExitOk;
}

// ---- reproduce -----------------------------------------------------------

struct ReproduceOptions {
  std::string example;
  std::string out = ".";
};

json critical_points_json(ExampleId id) {
  const ExampleSetup setup = example_setup(id);
  const DensityState psi = pure_state(setup.d, setup.amplitudes);
  const ComparisonTable table = literature_comparisons(id);

  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["direction"] = std::string(to_string(setup.direction));
  j["pure_state_norm"] = round_sig12(full_tensor_norm(psi));
  for (const auto& e : table.entries) {
    j["critical_x_" + e.name] = round_sig12(e.critical_x);
  }
  for (auto cid : setup.criteria) {
    const auto closed = critical_point(psi, cid, setup.direction, SolveMethod::ClosedForm);
    const auto bisect = critical_point(psi, cid, setup.direction, SolveMethod::Bisection);
    json c = {{"criterion", std::string(to_string(cid))},
              {"threshold", round_sig12(threshold(cid, setup.d))},
              {"x_star_closed_form", round_sig12(closed.x_star)},
              {"x_star_bisection", round_sig12(bisect.x_star)}};
    j["criteria"].push_back(std::move(c));
  }
  if (id == ExampleId::Ex2) j["ref38"] = kRef38WVisibility;
  return j;
}

int cmd_reproduce(const ReproduceOptions& o, std::ostream& out, std::ostream&) {
  ExampleId id;
  std::string stem;
  if (o.example == "1") {
    id = ExampleId::Ex1;
    stem = "example1";
  } else if (o.example == "2") {
    id = ExampleId::Ex2;
    stem = "example2";
  } else if (o.example == "3") {
    id = ExampleId::Ex3;
    stem = "example3";
  } else if (o.example == "fig1") {
    id = ExampleId::Ex1;
    stem = "fig1";
  } else {
    throw InvalidArgument("unknown example '" + o.example + "' (expected 1, 2, 3 or fig1)");
  }

  const fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create output directory '" + dir.string() + "'");

  const ExampleSetup setup = example_setup(id);
  const DensityState psi = pure_state(setup.d, setup.amplitudes);
  const auto grid = linear_grid(0.0, 1.0, 101);
  const std::optional<ExampleId> literature =
      id == ExampleId::Ex3 ? std::nullopt : std::optional<ExampleId>(id);
  const std::string csv = sweep_csv(sweep(psi, grid, setup.direction, literature));

  if (o.example == "fig1") {
    write_file_atomic(dir / "fig1.csv", csv);
    out << (dir / "fig1.csv").string() << '\n';
    return kExitOk;
  }
  json crit = critical_points_json(id);
  crit["example"] = o.example;
  write_file_atomic(dir / (stem + "_sweep.csv"), csv);
  write_file_atomic(dir / (stem + "_critical.json"), crit.dump(2) + "\n");
  write_file_atomic(dir / (stem + "_comparison.csv"), comparison_csv(literature_comparisons(id)));
  for (const char* suffix : {"_sweep.csv", "_critical.json", "_comparison.csv"})
    out << (dir / (stem + suffix)).string() << '\n';
  return kExitOk;
}

// ---- scan ----------------------------------------------------------------

struct ScanOptions {
  std::string mode;
  int d = 2;
  long samples = 1000;
  long mixed_samples = 0;
  Seed seed = 7;
  std::string state;
  std::string out;
  bool no_timestamp = false;
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  if (o.samples < 1) throw InvalidArgument("--samples must be >= 1");
  json report = report_envelope(!o.no_timestamp);
  report["command"] = "scan";
  report["seeds"] = json::array({o.seed});

  bool pass = false;
  if (o.mode == "bisep") {
    const long mixed = o.mixed_samples > 0 ? o.mixed_samples : std::max(1L, o.samples / 10);
    const auto r = biseparable_bound_scan(o.d, o.samples, mixed, o.seed);
    report["scan"] = scan_to_json(r);
    pass = r.pass;
    err << "bisep d=" << o.d << ": max norm " << format_number(std::max(r.max_pure, r.max_mixed))
        << " vs threshold " << format_number(r.threshold) << " -> " << (pass ? "pass" : "FAIL") << '\n';
  } else if (o.mode == "lu") {
    const std::string spec =
        !o.state.empty() ? o.state : (o.d == 2 ? std::string("builtin:ghz") : "builtin:gghz:" + std::to_string(o.d));
    const LoadedState s = load_state(spec);
    report_warnings(s, err);
    const double dev = lu_invariance_scan(s.state, static_cast<int>(o.samples), o.seed);
    pass = dev <= 1e-8;
    report["input"] = input_descriptor(s);
    report["scan"] = {{"mode", "lu"},
                      {"d", s.state.dim()},
                      {"samples", o.samples},
                      {"max_deviation", dev},
                      {"tolerance", 1e-8},
                      {"pass", pass}};
    err << "lu: max deviation " << format_number(dev) << " -> " << (pass ? "pass" : "FAIL") << '\n';
  } else {
    throw InvalidArgument("unknown scan mode '" + o.mode + "' (expected bisep or lu)");
  }
  emit(o.out, report.dump(2) + "\n", out);
  return kExitOk;
}

// ---- tensor / basis dumps ------------------------------------------------

struct TensorOptions {
  std::string state;
  bool restricted = false;
  std::string out;
};

int cmd_tensor(const TensorOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedState s = load_state(o.state);
  report_warnings(s, err);
  const auto basis = GeneratorBasis::build(s.state.dim(), Scaling::PaperScaled);
  const auto m = o.restricted ? restricted_correlation_matrix(s.state, basis)
                              : full_correlation_matrix(s.state, basis);
  emit(o.out, correlation_csv(m), out);
  return kExitOk;
}

struct BasisOptions {
  int d = 2;
  std::string scaling = "paper";
  std::string out;
};

int cmd_basis(const BasisOptions& o, std::ostream& out, std::ostream&) {
  const Scaling scaling = o.scaling == "standard" ? Scaling::Standard : Scaling::PaperScaled;
  const auto basis = GeneratorBasis::build(o.d, scaling);
  json j = report_envelope(false);
  j["command"] = "basis";
  j["d"] = o.d;
  j["scaling"] = o.scaling;
  j["generators"] = json::array();
  for (int i = 1; i <= basis.size(); ++i) {
    json rows = json::array();
    const auto& g = basis.generator(i);
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < g.cols(); ++c)
        row.push_back({round_sig12(g(r, c).real()), round_sig12(g(r, c).imag())});
      rows.push_back(std::move(row));
    }
    j["generators"].push_back({{"flat_index", i}, {"label", basis.label_of(i).to_string()}, {"matrix", rows}});
  }
  emit(o.out, j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genuine multipartite entanglement checks from correlation-tensor trace norms"};
  app.name("gme-kit");
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Evaluate GME criteria on a state");
  c->add_option("state", check.state, "State JSON file or builtin:<name>")->required();
  c->add_option("--criterion", check.criterion, "thm1|thm2|ref29|all")
      ->check(CLI::IsMember({"thm1", "thm2", "ref29", "all"}));
  c->add_option("--out", check.out, "Report path (default: stdout)");
  c->add_flag("--no-timestamp", check.no_timestamp, "Write generated_at as null");

  SweepOptions sw;
  auto* s = app.add_subcommand("sweep", "White-noise sweep to CSV");
  s->add_option("state", sw.state, "Pure state JSON file or builtin:<name>")->required();
  s->add_option("--grid", sw.grid, "start:stop:steps");
  s->add_option("--direction", sw.direction, "noise|visibility")->check(CLI::IsMember({"noise", "visibility"}));
  s->add_flag("--with-literature", sw.with_literature, "Add the quoted comparison columns (qubits)");
  s->add_option("--out", sw.out, "CSV path (default: stdout)");

  ReproduceOptions rep;
  auto* r = app.add_subcommand("reproduce", "Regenerate the worked examples");
  r->add_option("--example", rep.example, "1|2|3|fig1")->required();
  r->add_option("--out", rep.out, "Output directory");

  ScanOptions sc;
  auto* n = app.add_subcommand("scan", "Seeded soundness / LU-invariance scans");
  n->add_option("--mode", sc.mode, "bisep|lu")->required()->check(CLI::IsMember({"bisep", "lu"}));
  n->add_option("--d", sc.d, "Local dimension")->check(CLI::Range(2, 16));
  n->add_option("--samples", sc.samples, "Pure samples (bisep) or unitary trials (lu)");
  n->add_option("--mixed-samples", sc.mixed_samples, "Mixed samples for bisep (default samples/10)");
  n->add_option("--seed", sc.seed, "Master seed");
  n->add_option("--state", sc.state, "State for lu mode (default GHZ / GGHZ)");
  n->add_option("--out", sc.out, "Report path (default: stdout)");
  n->add_flag("--no-timestamp", sc.no_timestamp, "Write generated_at as null");

  TensorOptions tn;
  auto* t = app.add_subcommand("tensor", "Dump the correlation matrix as CSV");
  t->add_option("state", tn.state, "State JSON file or builtin:<name>")->required();
  t->add_flag("--restricted", tn.restricted, "Four-generator 4x16 unfolding (d >= 3)");
  t->add_option("--out", tn.out, "CSV path (default: stdout)");

  BasisOptions bs;
  auto* b = app.add_subcommand("basis", "Dump the generator basis as JSON");
  b->add_option("--d", bs.d, "Local dimension")->check(CLI::Range(2, 64));
  b->add_option("--scaling", bs.scaling, "paper|standard")->check(CLI::IsMember({"paper", "standard"}));
  b->add_option("--out", bs.out, "JSON path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*c) return cmd_check(check, out, err);
    if (*s) return cmd_sweep(sw, out, err);
    if (*r) return cmd_reproduce(rep, out, err);
    if (*n) return cmd_scan(sc, out, err);
    if (*t) return cmd_tensor(tn, out, err);
    if (*b) return cmd_basis(bs, out, err);
  } catch (const NumericalIntegrityError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gmekit::cli
