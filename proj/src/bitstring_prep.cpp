#include "gmclone/bitstring_prep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "gmclone/errors.hpp"
#include "gmclone/gisin_massar.hpp"

namespace gmclone {

namespace {

void check_clones(int clones) {
  if (clones < 1) throw DomainError("clone count must be >= 1, got " + std::to_string(clones));
  if (clones > max_pipeline_clones) {
    throw ResourceLimitError("clone count " + std::to_string(clones) + " exceeds the limit of " +
                             std::to_string(max_pipeline_clones) + " (2^" +
                             std::to_string(2 * clones - 1) + " bitstrings)");
  }
}

std::size_t register_size(int clones) { return static_cast<std::size_t>(2 * clones - 1); }

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "unparseable number '" + std::string(token) + "'");
  }
  return value;
}

BitString parse_bits(std::string_view token, std::size_t length, std::size_t line) {
  if (token.size() != length) {
    throw ParseError(line, "expected " + std::to_string(length) + " bits, got '" +
                               std::string(token) + "'");
  }
  try {
    return BitString::parse(token);
  } catch (const DomainError& e) {
    throw ParseError(line, e.what());
  }
}

// Splits on LF. A trailing LF does not produce an empty final line.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  return lines;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::string_view parity_class_code(ParityClass c) {
  switch (c) {
    case ParityClass::CloneOf0:
      return "C0";
    case ParityClass::CloneOf1:
      return "C1";
    case ParityClass::NotGM:
      break;
  }
  throw DomainError("NotGM has no stage-file code");
}

std::vector<BitString> gen_full_bitstrings(int clones) {
  check_clones(clones);
  const std::size_t n = register_size(clones);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<BitString> out;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) out.emplace_back(n, v);
  return out;
}

std::vector<BitString> gen_gm_bitstrings(int clones) {
  check_clones(clones);
  const auto zero = build_gm_basis(clones, 0).support(support_threshold);
  const auto one = build_gm_basis(clones, 1).support(support_threshold);
  std::vector<BitString> merged;
  merged.reserve(zero.size() + one.size());
  std::merge(zero.begin(), zero.end(), one.begin(), one.end(), std::back_inserter(merged));
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
    throw ConsistencyError("clone-of-0 and clone-of-1 supports overlap");
  }
  return merged;
}

ParityClass parity_classify(const BitString& bits, int clones) {
  if (clones < 1) throw DomainError("clone count must be >= 1");
  if (bits.size() != register_size(clones)) {
    throw DomainError("bitstring '" + bits.to_string() + "' does not have length 2M-1 = " +
                      std::to_string(register_size(clones)));
  }
  const int ones = bits.popcount();
  if (ones == clones - 1) return ParityClass::CloneOf0;
  if (ones == clones) return ParityClass::CloneOf1;
  return ParityClass::NotGM;
}

std::vector<GMMatrixRecord> assign_coefficients(int clones) {
  const auto full = gen_full_bitstrings(clones);
  const auto gm = gen_gm_bitstrings(clones);
  const int m = clones;

  std::vector<GMMatrixRecord> records;
  records.reserve(gm.size());
  for (const auto& bits : gm) {
    if (!std::binary_search(full.begin(), full.end(), bits)) {
      throw ConsistencyError("GM string " + bits.to_string() + " missing from FullBitString");
    }
    const ParityClass cls = parity_classify(bits, m);
    if (cls == ParityClass::NotGM) {
      throw ConsistencyError("GM string " + bits.to_string() + " has neither parity class");
    }
    const int b = cls == ParityClass::CloneOf0 ? 0 : 1;

    // Clone factors are |b> and perp|b> ~ |1-b>; anticlone factors are
    // anticlone|b> ~ |1-b> and its complement ~ |b>. Each factor contributes
    // one amplitude, possibly signed.
    const Qubit input = Qubit::basis(b);
    const Qubit anti = anticlone(input);
    const std::complex<double> clone_main = input[b];
    const std::complex<double> clone_perp = perp(input)[1 - b];
    const std::complex<double> anti_main = anti[1 - b];
    const std::complex<double> anti_perp = perp(anti)[b];

    const int clone_ones = bits.popcount(0, static_cast<std::size_t>(m));
    const int j = b == 0 ? clone_ones : m - clone_ones;
    const std::complex<double> sign = detail::ipow(clone_main, m - j) *
                                      detail::ipow(clone_perp, j) *
                                      detail::ipow(anti_main, m - 1 - j) *
                                      detail::ipow(anti_perp, j);
    const double multiplicity =
        detail::binomial<double>(m, j) * detail::binomial<double>(m - 1, j);
    const std::complex<double> c = sign * (gamma(m, j) / std::sqrt(multiplicity));
    // + 0.0 folds negative zeros produced by the sign products
    records.push_back({bits, {c.real() + 0.0, c.imag() + 0.0}, cls});
  }
  return records;
}

StateVector assemble_state(const std::vector<GMMatrixRecord>& records, int clones,
                           ParityClass which) {
  if (clones < 1) throw DomainError("clone count must be >= 1");
  StateVector out(static_cast<int>(register_size(clones)));
  for (const auto& r : records) {
    if (r.bits.size() != register_size(clones)) {
      throw DomainError("record " + r.bits.to_string() + " has the wrong length");
    }
    if (r.parity_class == which) out[static_cast<Eigen::Index>(r.bits.value())] = r.coefficient;
  }
  return out;
}

void write_stage(std::ostream& out, const std::vector<BitString>& strings) {
  for (const auto& s : strings) out << s.to_string() << '\n';
}

void write_stage(std::ostream& out, const std::vector<GMMatrixRecord>& records) {
  for (const auto& r : records) {
    out << r.bits.to_string() << '\t' << format_double(r.coefficient.real()) << '\t'
        << format_double(r.coefficient.imag()) << '\t' << parity_class_code(r.parity_class)
        << '\n';
  }
}

void write_stage(const std::filesystem::path& path, const std::vector<BitString>& strings) {
  auto out = open_for_write(path);
  write_stage(out, strings);
  finish_write(out, path);
}

void write_stage(const std::filesystem::path& path, const std::vector<GMMatrixRecord>& records) {
  auto out = open_for_write(path);
  write_stage(out, records);
  finish_write(out, path);
}

std::vector<BitString> read_bitstring_stage(std::istream& in, std::size_t length) {
  std::vector<BitString> out;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(in)) {
    ++line_no;
    BitString bits = parse_bits(line, length, line_no);
    if (!out.empty() && !(out.back() < bits)) {
      throw ParseError(line_no, "bitstrings not strictly ascending");
    }
    out.push_back(bits);
  }
  return out;
}

std::vector<GMMatrixRecord> read_matrix_stage(std::istream& in, int clones) {
  if (clones < 1) throw DomainError("clone count must be >= 1");
  const std::size_t length = register_size(clones);
  std::vector<GMMatrixRecord> out;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(in)) {
    ++line_no;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    GMMatrixRecord r;
    r.bits = parse_bits(fields[0], length, line_no);
    r.coefficient = {parse_double(fields[1], line_no), parse_double(fields[2], line_no)};
    if (fields[3] == "C0") {
      r.parity_class = ParityClass::CloneOf0;
    } else if (fields[3] == "C1") {
      r.parity_class = ParityClass::CloneOf1;
    } else {
      throw ParseError(line_no, "unknown class '" + std::string(fields[3]) + "'");
    }
    if (!out.empty() && !(out.back().bits < r.bits)) {
      throw ParseError(line_no, "records not strictly ascending");
    }
    out.push_back(r);
  }
  return out;
}

std::vector<BitString> read_bitstring_stage(const std::filesystem::path& path,
                                            std::size_t length) {
  auto in = open_for_read(path);
  return read_bitstring_stage(in, length);
}

std::vector<GMMatrixRecord> read_matrix_stage(const std::filesystem::path& path, int clones) {
  auto in = open_for_read(path);
  return read_matrix_stage(in, clones);
}

PipelineArtifacts run_pipeline(int clones, const std::filesystem::path& dir) {
  check_clones(clones);
  std::filesystem::create_directories(dir);
  PipelineArtifacts artifacts{dir / full_stage_name, dir / gm_stage_name, dir / matrix_stage_name};
  write_stage(artifacts.full_path, gen_full_bitstrings(clones));
  write_stage(artifacts.gm_path, gen_gm_bitstrings(clones));
  write_stage(artifacts.matrix_path, assign_coefficients(clones));
  return artifacts;
}

}  // namespace gmclone
