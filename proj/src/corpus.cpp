#include "stylediff/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "stylediff/canonical.hpp"
#include "stylediff/errors.hpp"

namespace stylediff {

using nlohmann::json;

namespace {

CorpusRecord parse_record(const std::string& line, int line_number) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), line_number);
    }
    if (!j.is_object()) throw SchemaError("record is not an object", line_number);

    CorpusRecord rec;
    rec.source_line = line_number;
    bool saw_task = false, saw_model = false, saw_ref = false, saw_cand = false,
         saw_passed = false;
    try {
        for (auto& [key, value] : j.items()) {
            if (key == "task_id") {
                rec.task_id = value.get<std::string>();
                saw_task = true;
            } else if (key == "model") {
                rec.model = value.get<std::string>();
                saw_model = true;
            } else if (key == "reference_code") {
                rec.reference_code = value.get<std::string>();
                saw_ref = true;
            } else if (key == "candidate_code") {
                rec.candidate_code = value.get<std::string>();
                saw_cand = true;
            } else if (key == "passed_tests") {
                rec.passed_tests = value.get<bool>();
                saw_passed = true;
            } else if (key == "verified_correct") {
                if (!value.is_null()) rec.verified_correct = value.get<bool>();
            } else if (key == "no_extra_code") {
                if (!value.is_null()) rec.no_extra_code = value.get<bool>();
            } else if (key == "repo_symbols") {
                rec.repo_symbols = value.get<std::vector<std::string>>();
            } else {
                throw SchemaError("unknown field: " + key, line_number);
            }
        }
    } catch (const json::exception& e) {
        throw SchemaError(std::string("mistyped field: ") + e.what(), line_number);
    }
    if (!saw_task) throw SchemaError("missing field: task_id", line_number);
    if (!saw_model) throw SchemaError("missing field: model", line_number);
    if (!saw_ref) throw SchemaError("missing field: reference_code", line_number);
    if (!saw_cand) throw SchemaError("missing field: candidate_code", line_number);
    if (!saw_passed) throw SchemaError("missing field: passed_tests", line_number);
    if (rec.task_id.empty()) throw SchemaError("empty task_id", line_number);
    if (rec.model.empty()) throw SchemaError("empty model", line_number);
    if (rec.reference_code.empty())
        throw SchemaError("empty reference_code", line_number);
    if (rec.candidate_code.empty())
        throw SchemaError("empty candidate_code", line_number);
    rec.merged_models = {rec.model};
    return rec;
}

}  // namespace

std::vector<CorpusRecord> parse_corpus_text(const std::string& text) {
    std::vector<CorpusRecord> records;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        records.push_back(parse_record(line, line_number));
    }
    return records;
}

std::vector<CorpusRecord> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_corpus_text(text);
}

std::vector<CorpusRecord> filter_passing(std::vector<CorpusRecord> records) {
    std::vector<CorpusRecord> out;
    out.reserve(records.size());
    for (CorpusRecord& r : records)
        if (r.passed_tests) out.push_back(std::move(r));
    return out;
}

std::vector<CorpusRecord> dedup(std::vector<CorpusRecord> records) {
    std::vector<CorpusRecord> out;
    std::map<std::pair<std::string, std::string>, size_t> seen;
    for (CorpusRecord& r : records) {
        auto key = std::make_pair(r.task_id, canonicalize(r.candidate_code));
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), out.size());
            out.push_back(std::move(r));
        } else {
            CorpusRecord& keeper = out[it->second];
            for (std::string& m : r.merged_models)
                keeper.merged_models.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<CorpusRecord> apply_manual_filters(std::vector<CorpusRecord> records,
                                               int* unreviewed) {
    std::vector<CorpusRecord> out;
    int unreviewed_count = 0;
    for (CorpusRecord& r : records) {
        if (r.verified_correct.has_value() && !*r.verified_correct) continue;
        if (r.no_extra_code.has_value() && !*r.no_extra_code) continue;
        if (!r.verified_correct.has_value() || !r.no_extra_code.has_value())
            ++unreviewed_count;
        out.push_back(std::move(r));
    }
    if (unreviewed) *unreviewed = unreviewed_count;
    return out;
}

// ------------------------------------------------------------- prompts ----

namespace {

const char* kDefaultGuideline =
    "Follow the coding style of the surrounding project: naming, spacing, "
    "comments, and structure should read as if written by the repository's "
    "own developers.";

const std::vector<std::string>& default_principles() {
    static const std::vector<std::string> p = {
        "Readability: convey the intent and logical structure clearly, with "
        "descriptive names and helpful comments.",
        "Conciseness: achieve the functionality without unnecessary "
        "redundancy; avoid superfluous intermediate variables and duplicated "
        "work.",
        "Robustness: handle corner cases and potential errors, validating "
        "inputs and guarding risky operations.",
    };
    return p;
}

}  // namespace

std::optional<PromptVariant> prompt_variant_from_name(const std::string& name) {
    if (name == "head-concise") return PromptVariant::HeadConcise;
    if (name == "head-detailed") return PromptVariant::HeadDetailed;
    if (name == "end-concise") return PromptVariant::EndConcise;
    if (name == "end-detailed") return PromptVariant::EndDetailed;
    return std::nullopt;
}

const char* prompt_variant_name(PromptVariant v) {
    switch (v) {
        case PromptVariant::HeadConcise: return "head-concise";
        case PromptVariant::HeadDetailed: return "head-detailed";
        case PromptVariant::EndConcise: return "end-concise";
        case PromptVariant::EndDetailed: return "end-detailed";
    }
    return "?";
}

TaskPrompt TaskPrompt::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), 0);
    }
    TaskPrompt t;
    try {
        t.signature = j.at("signature").get<std::string>();
        t.docstring = j.at("docstring").get<std::string>();
        if (j.contains("concise_guideline"))
            t.concise_guideline = j["concise_guideline"].get<std::string>();
        if (j.contains("detailed_principles"))
            t.detailed_principles =
                j["detailed_principles"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad task prompt: ") + e.what(), 0);
    }
    if (t.concise_guideline.empty()) {
        t.concise_guideline = kDefaultGuideline;
        t.used_default_guideline = true;
    }
    if (t.detailed_principles.empty()) {
        t.detailed_principles = default_principles();
        t.used_default_guideline = true;
    }
    if (t.detailed_principles.size() != 3)
        throw SchemaError("detailed_principles must have exactly 3 entries", 0);
    if (t.signature.empty()) throw SchemaError("empty signature", 0);
    return t;
}

TaskPrompt TaskPrompt::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open task prompt file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

std::string render_enhanced_prompt(const TaskPrompt& task, PromptVariant variant) {
    bool head = variant == PromptVariant::HeadConcise ||
                variant == PromptVariant::HeadDetailed;
    bool detailed = variant == PromptVariant::HeadDetailed ||
                    variant == PromptVariant::EndDetailed;

    std::string guidelines = task.concise_guideline;
    if (detailed) {
        for (const std::string& p : task.detailed_principles) {
            guidelines += "\n- " + p;
        }
    }

    std::string out;
    if (head) {
        // Directive placed before the signature and docstring.
        std::istringstream lines(guidelines);
        std::string line;
        while (std::getline(lines, line)) out += "# " + line + "\n";
        out += task.signature + "\n";
        out += "    \"\"\"" + task.docstring + "\n    \"\"\"\n";
    } else {
        // Guideline appended at the end of the original docstring.
        out += task.signature + "\n";
        out += "    \"\"\"" + task.docstring + "\n\n";
        std::istringstream lines(guidelines);
        std::string line;
        while (std::getline(lines, line)) out += "    " + line + "\n";
        out += "    \"\"\"\n";
    }
    return out;
}

}  // namespace stylediff
