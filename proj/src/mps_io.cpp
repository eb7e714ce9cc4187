#include "gmclone/mps_io.hpp"

#include <fstream>
#include <iterator>

#include <json.hpp>

#include "gmclone/errors.hpp"

namespace gmclone {

namespace {

using nlohmann::json;
using Scalar = std::complex<double>;

constexpr const char* format_tag = "gmclone-mps";
constexpr int format_version = 1;

json encode(const Scalar& z) { return json::array({z.real(), z.imag()}); }

Scalar decode_scalar(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(0, "complex entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename Derived>
json encode_entries(const Eigen::MatrixBase<Derived>& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(encode(m(r, c)));
  }
  return out;
}

MatrixProductState::Matrix decode_matrix(const json& entries, Eigen::Index rows,
                                         Eigen::Index cols) {
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw ParseError(0, "matrix entry count does not match its shape");
  }
  MatrixProductState::Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = decode_scalar(entries[static_cast<std::size_t>(r * cols + c)]);
    }
  }
  return m;
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(0, std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

Eigen::Index decode_dim(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(0, "bond dimensions must be positive integers");
  }
  return static_cast<Eigen::Index>(j.get<long long>());
}

}  // namespace

bool operator==(const MpsDocument& a, const MpsDocument& b) {
  const auto& x = a.mps;
  const auto& y = b.mps;
  if (x.sites.size() != y.sites.size()) return false;
  for (std::size_t k = 0; k < x.sites.size(); ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& p = x.sites[k].a[i];
      const auto& q = y.sites[k].a[i];
      if (p.rows() != q.rows() || p.cols() != q.cols() || p != q) return false;
    }
  }
  if (x.left_boundary.size() != y.left_boundary.size() || x.left_boundary != y.left_boundary) {
    return false;
  }
  if (x.right_boundary.size() != y.right_boundary.size() || x.right_boundary != y.right_boundary) {
    return false;
  }
  if (a.spectrum.has_value() != b.spectrum.has_value()) return false;
  if (!a.spectrum) return true;
  if (a.spectrum->tolerance != b.spectrum->tolerance) return false;
  if (a.spectrum->cuts.size() != b.spectrum->cuts.size()) return false;
  for (std::size_t k = 0; k < a.spectrum->cuts.size(); ++k) {
    const auto& c = a.spectrum->cuts[k];
    const auto& d = b.spectrum->cuts[k];
    if (c.retained_rank != d.retained_rank || c.singular_values != d.singular_values) return false;
  }
  return true;
}

std::string mps_to_json(const MpsDocument& doc) {
  doc.mps.validate();
  json j;
  j["format"] = format_tag;
  j["version"] = format_version;
  j["num_sites"] = doc.mps.num_sites();
  j["bond_dims"] = doc.mps.bond_dims();
  json sites = json::array();
  for (const auto& s : doc.mps.sites) {
    sites.push_back({{"shape", {s.rows(), s.cols()}},
                     {"A0", encode_entries(s.a[0])},
                     {"A1", encode_entries(s.a[1])}});
  }
  j["sites"] = std::move(sites);
  j["left_boundary"] = encode_entries(doc.mps.left_boundary);
  j["right_boundary"] = encode_entries(doc.mps.right_boundary.transpose());
  if (doc.spectrum) {
    json cuts = json::array();
    for (const auto& c : doc.spectrum->cuts) {
      cuts.push_back({{"retained_rank", c.retained_rank}, {"singular_values", c.singular_values}});
    }
    j["spectrum"] = {{"tolerance", doc.spectrum->tolerance}, {"cuts", std::move(cuts)}};
  }
  return j.dump(2) + "\n";
}

MpsDocument mps_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (field(j, "format") != format_tag) throw ParseError(0, "not a gmclone-mps document");
  if (field(j, "version") != format_version) throw ParseError(0, "unsupported MPS format version");

  try {
    MpsDocument doc;
    const auto& sites = field(j, "sites");
    if (!sites.is_array()) throw ParseError(0, "'sites' must be an array");
    if (field(j, "num_sites") != json(sites.size())) throw ParseError(0, "num_sites disagrees with sites");
    for (const auto& s : sites) {
      const auto& shape = field(s, "shape");
      if (!shape.is_array() || shape.size() != 2) throw ParseError(0, "shape must be [rows, cols]");
      const Eigen::Index rows = decode_dim(shape[0]);
      const Eigen::Index cols = decode_dim(shape[1]);
      MatrixProductState::Site site;
      site.a[0] = decode_matrix(field(s, "A0"), rows, cols);
      site.a[1] = decode_matrix(field(s, "A1"), rows, cols);
      doc.mps.sites.push_back(std::move(site));
    }
    const auto& left = field(j, "left_boundary");
    const auto& right = field(j, "right_boundary");
    if (!left.is_array() || !right.is_array()) throw ParseError(0, "boundaries must be arrays");
    doc.mps.left_boundary =
        decode_matrix(left, 1, static_cast<Eigen::Index>(left.size()));
    doc.mps.right_boundary =
        decode_matrix(right, static_cast<Eigen::Index>(right.size()), 1);
    doc.mps.validate();
    if (field(j, "bond_dims") != json(doc.mps.bond_dims())) {
      throw ParseError(0, "bond_dims disagrees with site shapes");
    }

    if (j.contains("spectrum")) {
      const auto& sp = j.at("spectrum");
      BondSpectrum spectrum;
      spectrum.tolerance = field(sp, "tolerance").get<double>();
      for (const auto& c : field(sp, "cuts")) {
        BondSpectrum::Cut cut;
        cut.retained_rank = field(c, "retained_rank").get<int>();
        cut.singular_values = field(c, "singular_values").get<std::vector<double>>();
        spectrum.cuts.push_back(std::move(cut));
      }
      doc.spectrum = std::move(spectrum);
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed MPS document: ") + e.what());
  } catch (const MalformedMpsError& e) {
    throw ParseError(0, e.what());
  }
}

void write_mps_json(const std::filesystem::path& path, const MpsDocument& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << mps_to_json(doc);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

MpsDocument read_mps_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return mps_from_json(std::string(std::istreambuf_iterator<char>(in), {}));
}

}  // namespace gmclone
