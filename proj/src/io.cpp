#include "qnm/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace qnm {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_as<double>(j, key);
}

Json decomposition_to_json(const IsotropicDecomposition& d) {
  return Json{{"alpha", d.alpha}, {"beta", d.beta}, {"residual", d.residual}};
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty list of rows");
  const auto rows = j.size();
  const auto cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw FormatError("matrix rows must be nonempty lists");
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw FormatError("matrix entry must be a [re, im] pair of numbers");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json ensemble_to_json(const UnitaryEnsemble& e) {
  Json us = Json::array();
  for (const auto& u : e.unitaries()) us.push_back(matrix_to_json(u));
  Json j{{"format", kFormatVersion}, {"d", e.dim()}, {"weights", e.weights()}, {"unitaries", std::move(us)}};
  const auto& m = e.meta();
  if (!m.source.empty() || m.seed || m.n) {
    Json meta{{"source", m.source}};
    if (m.seed) meta["seed"] = *m.seed;
    if (m.n) meta["n"] = *m.n;
    if (m.p) meta["p"] = *m.p;
    if (m.qudits) meta["qudits"] = *m.qudits;
    j["meta"] = std::move(meta);
  }
  return j;
}

UnitaryEnsemble ensemble_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("ensemble file must be a JSON object");
  if (get_as<int>(j, "format") != kFormatVersion) throw FormatError("unsupported ensemble format version");
  const auto d = get_as<std::size_t>(j, "d");
  auto weights = get_as<std::vector<double>>(j, "weights");
  const auto& us = field(j, "unitaries");
  if (!us.is_array()) throw FormatError("'unitaries' must be a list");
  std::vector<ComplexMatrix> unitaries;
  unitaries.reserve(us.size());
  for (const auto& u : us) unitaries.push_back(matrix_from_json(u));
  EnsembleMeta meta;
  if (j.contains("meta") && j.at("meta").is_object()) {
    const auto& mj = j.at("meta");
    if (mj.contains("source")) meta.source = get_as<std::string>(mj, "source");
    if (mj.contains("seed")) meta.seed = get_as<std::uint64_t>(mj, "seed");
    if (mj.contains("n")) meta.n = get_as<std::size_t>(mj, "n");
    if (mj.contains("p")) meta.p = get_as<std::size_t>(mj, "p");
    if (mj.contains("qudits")) meta.qudits = get_as<std::size_t>(mj, "qudits");
  }
  return UnitaryEnsemble(d, std::move(weights), std::move(unitaries), std::move(meta));
}

Json kraus_to_json(const KrausChannel& ch) {
  Json ks = Json::array();
  for (const auto& k : ch.kraus_ops()) ks.push_back(matrix_to_json(k));
  return Json{{"format", kFormatVersion}, {"d_in", ch.d_in()}, {"d_out", ch.d_out()}, {"kraus", std::move(ks)}};
}

KrausChannel kraus_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("Kraus file must be a JSON object");
  if (get_as<int>(j, "format") != kFormatVersion) throw FormatError("unsupported Kraus format version");
  const auto& ks = field(j, "kraus");
  if (!ks.is_array()) throw FormatError("'kraus' must be a list");
  std::vector<ComplexMatrix> ops;
  for (const auto& k : ks) ops.push_back(matrix_from_json(k));
  return KrausChannel(get_as<std::size_t>(j, "d_in"), get_as<std::size_t>(j, "d_out"), std::move(ops));
}

Json report_to_json(const CertificationReport& r) {
  return Json{
      {"d", r.d},
      {"n", r.n},
      {"one_design_dist", r.one_design_dist},
      {"two_design_trace_dist", r.two_design_trace_dist},
      {"diamond_upper_bound", r.diamond_upper_bound},
      {"multiplicative_theta", optional_number(r.multiplicative_theta)},
      {"support_leakage", r.support_leakage},
      {"omega_rank", r.omega_rank},
      {"rank_bound", r.rank_bound},
      {"conjectured_rank_bound", r.conjectured_rank_bound},
      {"frame_potential", r.frame_potential},
      {"entropy_bits", r.entropy_bits},
      {"entropy_bound_bits", optional_number(r.entropy_bound_bits)},
      {"passes_2design_at", r.tol},
      {"passes_1design", r.passes_1design},
      {"passes_2design_trace", r.passes_2design_trace},
      {"passes_2design_multiplicative", r.passes_2design_multiplicative},
  };
}

CertificationReport report_from_json(const Json& j) {
  CertificationReport r;
  r.d = get_as<std::size_t>(j, "d");
  r.n = get_as<std::size_t>(j, "n");
  r.one_design_dist = get_as<double>(j, "one_design_dist");
  r.two_design_trace_dist = get_as<double>(j, "two_design_trace_dist");
  r.diamond_upper_bound = get_as<double>(j, "diamond_upper_bound");
  r.multiplicative_theta = optional_from(j, "multiplicative_theta");
  r.support_leakage = get_as<double>(j, "support_leakage");
  r.omega_rank = get_as<std::size_t>(j, "omega_rank");
  r.rank_bound = get_as<std::size_t>(j, "rank_bound");
  r.conjectured_rank_bound = get_as<std::size_t>(j, "conjectured_rank_bound");
  r.frame_potential = get_as<double>(j, "frame_potential");
  r.entropy_bits = get_as<double>(j, "entropy_bits");
  r.entropy_bound_bits = optional_from(j, "entropy_bound_bits");
  r.tol = get_as<double>(j, "passes_2design_at");
  r.passes_1design = get_as<bool>(j, "passes_1design");
  r.passes_2design_trace = get_as<bool>(j, "passes_2design_trace");
  r.passes_2design_multiplicative = get_as<bool>(j, "passes_2design_multiplicative");
  return r;
}

Json attack_report_to_json(const AttackReport& r) {
  Json j{
      {"d", r.effective_choi.dim()},
      {"decomposition", decomposition_to_json(r.decomposition)},
      {"malleability_residual", r.malleability_residual},
      {"diamond_upper_bound", r.diamond_upper_bound},
      {"scheme_one_design_dist", r.scheme_one_design_dist},
      {"constant_channel_is_tau", r.constant_channel_is_tau},
      {"effective_choi", matrix_to_json(r.effective_choi.matrix())},
  };
  if (r.weyl_deviation) j["weyl_deviation"] = *r.weyl_deviation;
  return j;
}

Json report_file(std::string_view kind, Json body, std::string_view input_digest) {
  return Json{{"format", kFormatVersion},
              {"tool", kToolName},
              {"version", kToolVersion},
              {"kind", kind},
              {"input_digest", input_digest},
              {"report", std::move(body)}};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

}  // namespace qnm
