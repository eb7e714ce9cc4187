#ifndef GMCLONE_MPS_IO_HPP
#define GMCLONE_MPS_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "gmclone/mps.hpp"

namespace gmclone {

/// Document written by `write_mps_json`:
///
///   { "format": "gmclone-mps", "version": 1, "num_sites": n,
///     "bond_dims": [D_1, ..., D_{n+1}],
///     "sites": [ { "shape": [D_k, D_{k+1}], "A0": [[re, im], ...], "A1": [...] }, ... ],
///     "left_boundary": [[re, im], ...], "right_boundary": [[re, im], ...],
///     "spectrum": { "tolerance": t, "cuts": [ { "retained_rank": r,
///                                               "singular_values": [...] } ] } }
///
/// Matrix entries are row-major. "spectrum" is omitted when absent.
struct MpsDocument {
  MatrixProductState mps;
  std::optional<BondSpectrum> spectrum;

  friend bool operator==(const MpsDocument&, const MpsDocument&);
};

std::string mps_to_json(const MpsDocument& doc);
MpsDocument mps_from_json(const std::string& text);

void write_mps_json(const std::filesystem::path& path, const MpsDocument& doc);
MpsDocument read_mps_json(const std::filesystem::path& path);

}  // namespace gmclone

#endif  // GMCLONE_MPS_IO_HPP
