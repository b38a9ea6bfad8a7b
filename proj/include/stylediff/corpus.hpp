#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stylediff {

/// One line of a corpus file.
struct CorpusRecord {
    std::string task_id;
    std::string model;
    std::string reference_code;
    std::string candidate_code;
    bool passed_tests = false;
    std::optional<bool> verified_correct;
    std::optional<bool> no_extra_code;
    std::vector<std::string> repo_symbols;
    int source_line = 0;
    // Models whose identical candidates were merged into this record,
    // including this record's own model (one entry per merged occurrence).
    std::vector<std::string> merged_models;
};

/// Load a line-delimited corpus file. Each line is a JSON object with
/// exactly the CorpusRecord field names; unknown fields are rejected.
/// Throws SchemaError with the offending line, or IoError.
std::vector<CorpusRecord> load_corpus(const std::string& path);
std::vector<CorpusRecord> parse_corpus_text(const std::string& text);

/// Keep records whose candidates passed the unit tests. Order-preserving.
std::vector<CorpusRecord> filter_passing(std::vector<CorpusRecord> records);

/// One representative per (task_id, canonical candidate) class, keeping the
/// first occurrence and recording merged model occurrences. Idempotent;
/// never merges across task ids.
std::vector<CorpusRecord> dedup(std::vector<CorpusRecord> records);

/// Drop records whose manual review failed (verified_correct=false or
/// no_extra_code=false). Records with absent flags are kept; the count of
/// such unreviewed records is reported via `unreviewed` when non-null.
std::vector<CorpusRecord> apply_manual_filters(std::vector<CorpusRecord> records,
                                               int* unreviewed = nullptr);

// ------------------------------------------------------------- prompts ----

enum class PromptVariant : uint8_t {
    HeadConcise,
    HeadDetailed,
    EndConcise,
    EndDetailed,
};

/// Parse "head-concise" | "head-detailed" | "end-concise" | "end-detailed".
std::optional<PromptVariant> prompt_variant_from_name(const std::string& name);
const char* prompt_variant_name(PromptVariant v);

struct TaskPrompt {
    std::string signature;
    std::string docstring;
    std::string concise_guideline;
    std::vector<std::string> detailed_principles;  // readability, conciseness,
                                                   // robustness
    bool used_default_guideline = false;

    /// Load from a JSON document; guideline fields fall back to the shipped
    /// defaults when absent, and the prompt is marked accordingly.
    static TaskPrompt from_json_text(const std::string& text);
    static TaskPrompt load_file(const std::string& path);
};

/// Render one of the four enhanced prompt variants. Head variants place the
/// guideline before the signature; end variants append it inside the
/// docstring; detailed variants add the three principles.
std::string render_enhanced_prompt(const TaskPrompt& task, PromptVariant variant);

}  // namespace stylediff
