#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qnm/attack.hpp"
#include "qnm/channel.hpp"
#include "qnm/design.hpp"
#include "qnm/ensemble.hpp"
#include "qnm/matrix.hpp"

namespace qnm {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kToolName = "qnm";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file is not valid JSON or does not follow the expected schema.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::json;

// Matrices are lists of rows; each entry is a [re, im] pair.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// EnsembleFile: {"format":1,"d":..,"weights":[..],"unitaries":[..],"meta":{source,seed,n,...}}
Json ensemble_to_json(const UnitaryEnsemble& e);
UnitaryEnsemble ensemble_from_json(const Json& j);

// Kraus file: {"format":1,"d_in":..,"d_out":..,"kraus":[matrix,...]}
Json kraus_to_json(const KrausChannel& ch);
KrausChannel kraus_from_json(const Json& j);

Json report_to_json(const CertificationReport& r);
CertificationReport report_from_json(const Json& j);
Json attack_report_to_json(const AttackReport& r);

/// Wraps a report body with format, tool, version and input digest.
Json report_file(std::string_view kind, Json body, std::string_view input_digest);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);
Json parse_json(std::string_view text);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace qnm
