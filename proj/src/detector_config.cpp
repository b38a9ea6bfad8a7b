#include "stylediff/detector_config.hpp"

#include <fstream>

#include "json.hpp"
#include "stylediff/canonical.hpp"
#include "stylediff/errors.hpp"

namespace stylediff {

using ordered_json = nlohmann::ordered_json;

std::string DetectorConfig::to_json_text() const {
    ordered_json j;
    j["generic_identifiers"] = generic_identifiers;
    j["comment_terse_max"] = comment_terse_max;
    j["comment_normal_max"] = comment_normal_max;
    j["inline_min_tokens"] = inline_min_tokens;
    j["long_line_limit"] = long_line_limit;
    j["weight_identifiers"] = weight_identifiers;
    j["weight_comments"] = weight_comments;
    j["weight_line_length"] = weight_line_length;
    j["weight_nesting"] = weight_nesting;
    j["tie_band_fraction"] = tie_band_fraction;
    j["williams_correction"] = williams_correction;
    j["name_list_version"] = name_list_version;
    return j.dump(2);
}

DetectorConfig DetectorConfig::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what(), 0);
    }
    DetectorConfig cfg;
    try {
        for (auto& [key, value] : j.items()) {
            if (key == "generic_identifiers")
                cfg.generic_identifiers = value.get<std::vector<std::string>>();
            else if (key == "comment_terse_max")
                cfg.comment_terse_max = value.get<int>();
            else if (key == "comment_normal_max")
                cfg.comment_normal_max = value.get<int>();
            else if (key == "inline_min_tokens")
                cfg.inline_min_tokens = value.get<int>();
            else if (key == "long_line_limit")
                cfg.long_line_limit = value.get<int>();
            else if (key == "weight_identifiers")
                cfg.weight_identifiers = value.get<double>();
            else if (key == "weight_comments")
                cfg.weight_comments = value.get<double>();
            else if (key == "weight_line_length")
                cfg.weight_line_length = value.get<double>();
            else if (key == "weight_nesting")
                cfg.weight_nesting = value.get<double>();
            else if (key == "tie_band_fraction")
                cfg.tie_band_fraction = value.get<double>();
            else if (key == "williams_correction")
                cfg.williams_correction = value.get<bool>();
            else if (key == "name_list_version")
                cfg.name_list_version = value.get<std::string>();
            else
                throw SchemaError("unknown config key: " + key, 0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("mistyped config value: ") + e.what(), 0);
    }
    return cfg;
}

DetectorConfig DetectorConfig::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

std::string DetectorConfig::digest() const { return fnv1a_hex(to_json_text()); }

}  // namespace stylediff
