#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "avwc/types.hpp"
#include "avwc/wiretap.hpp"

namespace avwc::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "0.1.0";

/// File-format error carrying a field/row diagnostic.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses a decimal probability string at full binary-float precision.
double prob_from_string(const std::string& s);
/// Shortest decimal string that round-trips to the same double.
std::string prob_to_string(double v);

/// Rejects absent/duff schema_version and any future major version.
void check_schema_version(const json& j, const std::string& context);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
std::string file_digest(const std::string& path);

using ModelFile = std::variant<AvwcFamily, GavwcInstance, RandomEncoderCode>;

/// Loads any model file, dispatching on its "kind".
ModelFile load_model(const std::string& path);

AvwcFamily parse_avwc_family(const json& j);
GavwcInstance parse_gavwc_instance(const json& j);
RandomEncoderCode parse_code(const json& j);

json to_json(const Channel& ch);
Channel parse_channel(const json& j, const std::string& context);
json to_json(const AvwcFamily& family);
json to_json(const GavwcInstance& g);
json to_json(const RandomEncoderCode& code);

/// Report value carrying its tolerance and an exact/heuristic flag.
json reported_value(double value, double tol, bool exact);

}  // namespace avwc::io
