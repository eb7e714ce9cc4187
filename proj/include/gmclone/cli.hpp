#ifndef GMCLONE_CLI_HPP
#define GMCLONE_CLI_HPP

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gmclone/bitstring_prep.hpp"
#include "gmclone/errors.hpp"
#include "gmclone/qubit.hpp"

namespace gmclone::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_resource_limit = 3,
  exit_internal_consistency = 4,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct BasisInput {
  int bit = 0;
};
struct EquatorialInput {
  double phi = 0;
};
struct AmplitudeInput {
  std::complex<double> alpha;
  std::complex<double> beta;
};

/// "basis:0" | "basis:1" | "equatorial:PHI" | "amps:RE,IM,RE,IM"
using InputSpec = std::variant<BasisInput, EquatorialInput, AmplitudeInput>;

InputSpec parse_input_spec(std::string_view text);

/// equatorial:phi maps to (1, e^{i phi}) / sqrt(2); amplitude pairs are normalized.
Qubit to_qubit(const InputSpec& spec);

enum class Command { prepare, compile, analyze, sweep };
enum class OutputFormat { json, csv };

struct RunConfig {
  Command command = Command::prepare;
  int clones = 1;
  InputSpec input = EquatorialInput{0.0};
  double tol = 1e-12;
  std::filesystem::path out_dir = ".";
  bool out_given = false;
  OutputFormat format = OutputFormat::json;
};

// Each command writes its human/machine-readable summary to `out`.
PipelineArtifacts cmd_prepare(const RunConfig& cfg, std::ostream& out);
void cmd_compile(const RunConfig& cfg, std::ostream& out);
void cmd_analyze(const RunConfig& cfg, std::ostream& out);
void cmd_sweep(const RunConfig& cfg, std::ostream& out);

/// Parses `args` (without the program name), dispatches, and maps errors to
/// exit codes: usage 2, resource guard 3, internal consistency 4, other 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmclone::cli

#endif  // GMCLONE_CLI_HPP
