#pragma once

#include <string>
#include <vector>

namespace stylediff {

/// Tunable thresholds for the rule engine and quality metrics. Serialized
/// with every report so results are reproducible; the digest of the
/// serialized form identifies the configuration.
struct DetectorConfig {
    // Type 7: identifiers considered generic in addition to single letters.
    std::vector<std::string> generic_identifiers = {"tmp", "temp", "val", "res",
                                                    "obj", "arr", "lst", "dct"};
    // Type 8: per-comment word-count buckets.
    int comment_terse_max = 3;
    int comment_normal_max = 12;
    // Type 4: minimum token length of an intermediate's expression before
    // the inlined form is searched for on the other side.
    int inline_min_tokens = 3;
    // Readability metric.
    int long_line_limit = 99;
    double weight_identifiers = 1.0;
    double weight_comments = 1.0;
    double weight_line_length = 1.0;
    double weight_nesting = 1.0;
    double tie_band_fraction = 0.05;
    // G-test.
    bool williams_correction = false;
    // Versioned name lists for API-source classification (type 13).
    std::string name_list_version = "python-names-v1";

    static DetectorConfig defaults() { return {}; }

    /// Parse from a JSON document; unknown keys are rejected.
    static DetectorConfig from_json_text(const std::string& text);
    static DetectorConfig load_file(const std::string& path);

    std::string to_json_text() const;
    /// Stable digest of the serialized configuration.
    std::string digest() const;
};

}  // namespace stylediff
