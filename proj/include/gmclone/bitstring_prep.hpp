#ifndef GMCLONE_BITSTRING_PREP_HPP
#define GMCLONE_BITSTRING_PREP_HPP

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "gmclone/bitstring.hpp"
#include "gmclone/state_vector.hpp"

namespace gmclone {

/// FullBitString holds 2^(2M-1) lines; beyond this the pipeline refuses to run.
inline constexpr int max_pipeline_clones = 12;

/// Amplitudes with modulus at or below this are treated as outside the support.
inline constexpr double support_threshold = 1e-13;

enum class ParityClass { CloneOf0, CloneOf1, NotGM };

/// "C0", "C1"; NotGM has no file representation.
std::string_view parity_class_code(ParityClass c);

struct GMMatrixRecord {
  BitString bits;
  std::complex<double> coefficient;
  ParityClass parity_class = ParityClass::NotGM;

  friend bool operator==(const GMMatrixRecord&, const GMMatrixRecord&) = default;
};

struct PipelineArtifacts {
  std::filesystem::path full_path;
  std::filesystem::path gm_path;
  std::filesystem::path matrix_path;
};

inline constexpr std::string_view full_stage_name = "FullBitString";
inline constexpr std::string_view gm_stage_name = "GMBitString";
inline constexpr std::string_view matrix_stage_name = "GMMatrix";

/// Every bitstring of length 2M-1, ascending.
std::vector<BitString> gen_full_bitstrings(int clones);

/// Sorted union of the supports of the |0> and |1> cloner outputs.
std::vector<BitString> gen_gm_bitstrings(int clones);

/// popcount M-1 -> CloneOf0, popcount M -> CloneOf1, anything else -> NotGM.
ParityClass parity_classify(const BitString& bits, int clones);

/// One record per GM string, located in the full enumeration by binary search
/// and weighted by gamma_j / sqrt(C(M, j) C(M-1, j)) with the sign carried by
/// the orthogonal-complement factors.
std::vector<GMMatrixRecord> assign_coefficients(int clones);

/// Scatters the records of one parity class into a (2M-1)-qubit state.
StateVector assemble_state(const std::vector<GMMatrixRecord>& records, int clones,
                           ParityClass which);

// Stage files. Writers emit LF-terminated lines; readers validate length,
// alphabet, strict ascending order, and throw ParseError naming the line.
void write_stage(std::ostream& out, const std::vector<BitString>& strings);
void write_stage(std::ostream& out, const std::vector<GMMatrixRecord>& records);
void write_stage(const std::filesystem::path& path, const std::vector<BitString>& strings);
void write_stage(const std::filesystem::path& path, const std::vector<GMMatrixRecord>& records);

std::vector<BitString> read_bitstring_stage(std::istream& in, std::size_t length);
std::vector<GMMatrixRecord> read_matrix_stage(std::istream& in, int clones);
std::vector<BitString> read_bitstring_stage(const std::filesystem::path& path, std::size_t length);
std::vector<GMMatrixRecord> read_matrix_stage(const std::filesystem::path& path, int clones);

/// Runs the three stages and writes FullBitString, GMBitString, GMMatrix into `dir`.
PipelineArtifacts run_pipeline(int clones, const std::filesystem::path& dir);

}  // namespace gmclone

#endif  // GMCLONE_BITSTRING_PREP_HPP
