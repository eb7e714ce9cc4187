#include "gmclone/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmclone/analysis.hpp"
#include "gmclone/gisin_massar.hpp"
#include "gmclone/mps.hpp"
#include "gmclone/mps_io.hpp"

namespace gmclone::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view token, std::string_view context) {
  double value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw UsageError("invalid number '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

json encode(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json describe_input(const Qubit& q) { return {{"alpha", encode(q.alpha())}, {"beta", encode(q.beta())}}; }

void check_state_clones(int clones) {
  if (clones > max_pipeline_clones) {
    throw ResourceLimitError("clone count " + std::to_string(clones) + " exceeds the limit of " +
                             std::to_string(max_pipeline_clones));
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

// A basis-input state for `compile`, taken from an existing GMMatrix stage when
// one is present in the output directory.
StateVector basis_state_for(const RunConfig& cfg, int bit, std::string& source) {
  const auto path = cfg.out_dir / matrix_stage_name;
  if (std::filesystem::exists(path)) {
    source = "GMMatrix";
    const auto records = read_matrix_stage(path, cfg.clones);
    return assemble_state(records, cfg.clones,
                          bit == 0 ? ParityClass::CloneOf0 : ParityClass::CloneOf1);
  }
  source = "builder";
  return build_gm_basis(cfg.clones, bit);
}

}  // namespace

InputSpec parse_input_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("input spec '" + std::string(text) + "' lacks a ':'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view value = text.substr(colon + 1);
  if (kind == "basis") {
    if (value == "0") return BasisInput{0};
    if (value == "1") return BasisInput{1};
    throw UsageError("basis input must be basis:0 or basis:1");
  }
  if (kind == "equatorial") return EquatorialInput{parse_number(value, "equatorial angle")};
  if (kind == "amps") {
    const auto parts = split(value, ',');
    if (parts.size() != 4) throw UsageError("amps input needs RE,IM,RE,IM");
    return AmplitudeInput{{parse_number(parts[0], "amps"), parse_number(parts[1], "amps")},
                          {parse_number(parts[2], "amps"), parse_number(parts[3], "amps")}};
  }
  throw UsageError("unknown input kind '" + std::string(kind) + "'");
}

Qubit to_qubit(const InputSpec& spec) {
  return std::visit(
      [](const auto& s) -> Qubit {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BasisInput>) {
          return Qubit::basis(s.bit);
        } else if constexpr (std::is_same_v<T, EquatorialInput>) {
          return Qubit::equatorial(s.phi);
        } else {
          try {
            return make_qubit(s.alpha, s.beta);
          } catch (const InvalidStateError& e) {
            throw UsageError(e.what());
          }
        }
      },
      spec);
}

PipelineArtifacts cmd_prepare(const RunConfig& cfg, std::ostream& out) {
  const auto artifacts = run_pipeline(cfg.clones, cfg.out_dir);
  const auto records = read_matrix_stage(artifacts.matrix_path, cfg.clones);
  const auto clone_of_0 = std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.parity_class == ParityClass::CloneOf0;
  });
  const json summary = {
      {"M", cfg.clones},
      {"num_qubits", 2 * cfg.clones - 1},
      {"full_count", std::uint64_t{1} << (2 * cfg.clones - 1)},
      {"gm_count", records.size()},
      {"clone_of_0", clone_of_0},
      {"clone_of_1", static_cast<std::int64_t>(records.size()) - clone_of_0},
      {"files",
       {{"FullBitString", artifacts.full_path.string()},
        {"GMBitString", artifacts.gm_path.string()},
        {"GMMatrix", artifacts.matrix_path.string()}}}};
  out << summary.dump(2) << '\n';
  return artifacts;
}

void cmd_compile(const RunConfig& cfg, std::ostream& out) {
  check_state_clones(cfg.clones);
  const Qubit input = to_qubit(cfg.input);
  std::string source = "builder";
  const StateVector state = std::holds_alternative<BasisInput>(cfg.input)
                                ? basis_state_for(cfg, std::get<BasisInput>(cfg.input).bit, source)
                                : build_gm(cfg.clones, input);

  const auto compiled = mps_from_state(state, cfg.tol);
  const double roundtrip_error =
      (state.amplitudes() - mps_to_state(compiled.mps).amplitudes()).norm();

  std::filesystem::create_directories(cfg.out_dir);
  const auto mps_path = cfg.out_dir / "mps.json";
  write_mps_json(mps_path, {compiled.mps, compiled.spectrum});

  json singular_values = json::array();
  json retained = json::array();
  for (const auto& cut : compiled.spectrum.cuts) {
    singular_values.push_back(cut.singular_values);
    retained.push_back(cut.retained_rank);
  }
  const json report = {{"M", cfg.clones},
                       {"num_qubits", state.num_qubits()},
                       {"input", describe_input(input)},
                       {"source", source},
                       {"tol", cfg.tol},
                       {"bond_dims", compiled.mps.bond_dims()},
                       {"bond_dimension", bond_dimension(compiled.mps)},
                       {"retained_ranks", retained},
                       {"singular_values_per_cut", singular_values},
                       {"discarded_weight", compiled.spectrum.discarded_weight()},
                       {"roundtrip_error", roundtrip_error},
                       {"mps_path", mps_path.string()}};
  const std::string text = report.dump(2) + "\n";
  write_text(cfg.out_dir / "compile_report.json", text);
  out << text;
}

void cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  check_state_clones(cfg.clones);
  const Qubit input = to_qubit(cfg.input);
  const StateVector state = build_gm(cfg.clones, input);
  const double optimal = (2.0 * cfg.clones + 1.0) / (3.0 * cfg.clones);
  const json report = {
      {"M", cfg.clones},
      {"input", describe_input(input)},
      {"clone_fidelities", clone_fidelity(state, cfg.clones, input)},
      {"anticlone_fidelities", anticlone_fidelity(state, cfg.clones, input)},
      {"optimal_universal_fidelity", optimal},
      {"nonlinearity_gap", nonlinearity_gap(cfg.clones, input.alpha(), input.beta())}};
  const std::string text = report.dump(2) + "\n";
  if (cfg.out_given) {
    std::filesystem::create_directories(cfg.out_dir);
    write_text(cfg.out_dir / "analyze_report.json", text);
  }
  out << text;
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto rows = scaling_sweep(1, cfg.clones, cfg.tol);
  std::string text;
  std::string name;
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream csv;
    write_scaling_csv(csv, rows);
    text = csv.str();
    name = "scaling.csv";
  } else {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"M", r.clones},
                   {"num_qubits", r.num_qubits},
                   {"bond_dim", r.bond_dim},
                   {"cut_ranks", r.cut_ranks},
                   {"tol", r.tol}});
    }
    text = j.dump(2) + "\n";
    name = "scaling.json";
  }
  std::filesystem::create_directories(cfg.out_dir);
  write_text(cfg.out_dir / name, text);
  out << text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gisin-Massar cloner simulator and MPS compiler", "gmclone"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input_text = "equatorial:0";
  std::string format_text;
  std::string out_text;

  const auto add_common = [&](CLI::App* sub, bool takes_input, const char* default_format) {
    sub->add_option("--clones", cfg.clones, "number of clones M")->required();
    if (takes_input) {
      sub->add_option("--input", input_text,
                      "basis:0 | basis:1 | equatorial:PHI | amps:RE,IM,RE,IM");
    }
    sub->add_option("--tol", cfg.tol, "relative singular-value cutoff in [0, 1)");
    sub->add_option("--out", out_text, "output directory");
    sub->add_option("--format", format_text, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str(default_format);
  };

  auto* prepare = app.add_subcommand("prepare", "write FullBitString, GMBitString, GMMatrix");
  add_common(prepare, false, "json");
  auto* compile = app.add_subcommand("compile", "compile a cloner output into an MPS");
  add_common(compile, true, "json");
  auto* analyze = app.add_subcommand("analyze", "fidelities and nonlinearity gap");
  add_common(analyze, true, "json");
  auto* sweep = app.add_subcommand("sweep", "bond dimension versus M");
  add_common(sweep, false, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*prepare) cfg.command = Command::prepare;
    if (*compile) cfg.command = Command::compile;
    if (*analyze) cfg.command = Command::analyze;
    if (*sweep) cfg.command = Command::sweep;

    if (cfg.clones < 1) throw UsageError("--clones must be >= 1");
    if (!(cfg.tol >= 0.0 && cfg.tol < 1.0)) throw UsageError("--tol must lie in [0, 1)");
    cfg.input = parse_input_spec(input_text);
    if (!out_text.empty()) {
      cfg.out_dir = out_text;
      cfg.out_given = true;
    }
    if (format_text.empty()) format_text = cfg.command == Command::sweep ? "csv" : "json";
    cfg.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (cfg.format == OutputFormat::csv && cfg.command != Command::sweep) {
      throw UsageError("--format csv is only available for sweep");
    }
    to_qubit(cfg.input);

    switch (cfg.command) {
      case Command::prepare:
        cmd_prepare(cfg, out);
        break;
      case Command::compile:
        cmd_compile(cfg, out);
        break;
      case Command::analyze:
        cmd_analyze(cfg, out);
        break;
      case Command::sweep:
        cmd_sweep(cfg, out);
        break;
    }
    return exit_ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource_limit;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return exit_internal_consistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace gmclone::cli
