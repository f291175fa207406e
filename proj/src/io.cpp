#include "avwc/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "avwc/counterexample.hpp"

namespace avwc::io {

double prob_from_string(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw FormatError("bad decimal probability string: '" + s + "'");
    return v;
}

std::string prob_to_string(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw FormatError("probability serialization failed");
    return std::string(buf, ptr);
}

void check_schema_version(const json& j, const std::string& context) {
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw FormatError(context + ": missing schema_version");
    const std::string v = j["schema_version"];
    const auto dot = v.find('.');
    int major = -1;
    if (dot != std::string::npos) {
        try {
            major = std::stoi(v.substr(0, dot));
        } catch (...) {
        }
    }
    if (major < 0) throw FormatError(context + ": malformed schema_version '" + v + "'");
    if (major > 1)
        throw FormatError(context + ": schema_version '" + v + "' is newer than this tool");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::uint64_t h = 14695981039346656037ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

Channel parse_channel(const json& j, const std::string& context) {
    if (!j.is_array() || j.empty())
        throw FormatError(context + ": expected a non-empty array of rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto& jr = j[r];
        if (!jr.is_array())
            throw FormatError(context + " row " + std::to_string(r) + ": expected an array");
        std::vector<double> row;
        row.reserve(jr.size());
        for (const auto& cell : jr) {
            if (!cell.is_string())
                throw FormatError(context + " row " + std::to_string(r) +
                                  ": probabilities must be decimal strings");
            row.push_back(prob_from_string(cell.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    try {
        return Channel(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw FormatError(context + ": " + e.what());
    }
}

json to_json(const Channel& ch) {
    json rows = json::array();
    for (std::size_t x = 0; x < ch.input_size(); ++x) {
        json row = json::array();
        for (std::size_t z = 0; z < ch.output_size(); ++z) row.push_back(prob_to_string(ch(x, z)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Channel lists accept either explicit matrices or a generator shorthand.
std::vector<Channel> parse_channel_list(const json& j, std::size_t block_length,
                                        const std::string& context) {
    std::vector<Channel> out;
    if (j.is_object()) {
        if (!j.contains("generator"))
            throw FormatError(context + ": object form requires a 'generator'");
        const std::string gen = j["generator"];
        if (gen == "identity") {
            out.push_back(Channel::identity(std::size_t{1} << block_length));
        } else if (gen == "v_theta" || gen == "gavc_erasure") {
            if (!j.contains("thetas") || !j["thetas"].is_array() || j["thetas"].empty())
                throw FormatError(context + ": generator '" + gen +
                                  "' requires a non-empty 'thetas' array");
            for (const auto& jt : j["thetas"]) {
                std::vector<std::size_t> members;
                for (const auto& m : jt) members.push_back(m.get<std::size_t>());
                const ThetaSubset theta = make_theta(block_length, std::move(members));
                out.push_back(gen == "v_theta" ? v_theta_channel(theta)
                                               : gavc_erasure_channel(theta));
            }
        } else {
            throw FormatError(context + ": unknown generator '" + gen + "'");
        }
        return out;
    }
    if (!j.is_array() || j.empty())
        throw FormatError(context + ": expected a channel array or generator object");
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_channel(j[i], context + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

AvwcFamily parse_avwc_family(const json& j) {
    check_schema_version(j, "avwc_family");
    if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
        throw FormatError("avwc_family: missing non-empty 'states'");
    std::vector<AvwcFamily::StatePair> states;
    for (std::size_t s = 0; s < j["states"].size(); ++s) {
        const auto& js = j["states"][s];
        const std::string ctx = "states[" + std::to_string(s) + "]";
        if (!js.contains("main") || !js.contains("wiretap"))
            throw FormatError(ctx + ": needs 'main' and 'wiretap'");
        states.push_back(AvwcFamily::StatePair{parse_channel(js["main"], ctx + ".main"),
                                               parse_channel(js["wiretap"], ctx + ".wiretap")});
    }
    return AvwcFamily(std::move(states));
}

GavwcInstance parse_gavwc_instance(const json& j) {
    check_schema_version(j, "gavwc_instance");
    if (!j.contains("block_length"))
        throw FormatError("gavwc_instance: missing 'block_length'");
    const std::size_t n = j["block_length"].get<std::size_t>();
    if (!j.contains("mains") || !j.contains("wiretaps"))
        throw FormatError("gavwc_instance: needs 'mains' and 'wiretaps'");
    return GavwcInstance(n, parse_channel_list(j["mains"], n, "mains"),
                         parse_channel_list(j["wiretaps"], n, "wiretaps"));
}

RandomEncoderCode parse_code(const json& j) {
    check_schema_version(j, "random_encoder_code");
    if (!j.contains("encoder")) throw FormatError("random_encoder_code: missing 'encoder'");
    Channel encoder = parse_channel(j["encoder"], "encoder");
    if (!j.contains("decoder") || !j["decoder"].is_array())
        throw FormatError("random_encoder_code: missing 'decoder' array");
    std::vector<std::size_t> decoder;
    decoder.reserve(j["decoder"].size());
    for (const auto& d : j["decoder"]) {
        const long long v = d.get<long long>();
        decoder.push_back(v < 0 ? RandomEncoderCode::kErrorSymbol
                                : static_cast<std::size_t>(v));
    }
    try {
        return RandomEncoderCode(std::move(encoder), std::move(decoder));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("random_encoder_code: ") + e.what());
    }
}

ModelFile load_model(const std::string& path) {
    const json j = load_json_file(path);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw FormatError(path + ": missing 'kind'");
    const std::string kind = j["kind"];
    if (kind == "avwc_family") return parse_avwc_family(j);
    if (kind == "gavwc_instance") return parse_gavwc_instance(j);
    if (kind == "random_encoder_code") return parse_code(j);
    throw FormatError(path + ": unknown kind '" + kind + "'");
}

json to_json(const AvwcFamily& family) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "avwc_family";
    json states = json::array();
    for (const auto& sp : family.states()) {
        json s;
        s["main"] = to_json(sp.main);
        s["wiretap"] = to_json(sp.wiretap);
        states.push_back(std::move(s));
    }
    j["states"] = std::move(states);
    return j;
}

json to_json(const GavwcInstance& g) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "gavwc_instance";
    j["block_length"] = g.block_length();
    json mains = json::array();
    for (const auto& c : g.mains()) mains.push_back(to_json(c));
    json wiretaps = json::array();
    for (const auto& c : g.wiretaps()) wiretaps.push_back(to_json(c));
    j["mains"] = std::move(mains);
    j["wiretaps"] = std::move(wiretaps);
    return j;
}

json to_json(const RandomEncoderCode& code) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "random_encoder_code";
    j["encoder"] = to_json(code.encoder);
    json decoder = json::array();
    for (std::size_t d : code.decoder)
        decoder.push_back(d == RandomEncoderCode::kErrorSymbol ? -1
                                                               : static_cast<long long>(d));
    j["decoder"] = std::move(decoder);
    return j;
}

json reported_value(double value, double tol, bool exact) {
    json j;
    j["value"] = prob_to_string(value);
    j["tol"] = prob_to_string(tol);
    j["exact"] = exact;
    return j;
}

}  // namespace avwc::io
