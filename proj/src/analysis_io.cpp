#include <charconv>
#include <ostream>
#include <string>

#include "gmclone/analysis.hpp"

namespace gmclone {

namespace {

std::string shortest(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows) {
  out << "M,num_qubits,bond_dim,cut_ranks,tol\n";
  for (const auto& r : rows) {
    out << r.clones << ',' << r.num_qubits << ',' << r.bond_dim << ',';
    for (std::size_t i = 0; i < r.cut_ranks.size(); ++i) {
      if (i) out << ';';
      out << r.cut_ranks[i];
    }
    out << ',' << shortest(r.tol) << '\n';
  }
}

}  // namespace gmclone
