#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stylediff/detector_config.hpp"
#include "stylediff/source_unit.hpp"
#include "stylediff/taxonomy.hpp"

namespace stylediff {

/// One reference/candidate pair plus task and model metadata.
struct CodePair {
    std::string task_id;
    std::string model;
    SourceUnit reference;
    SourceUnit candidate;
    // Function/method names defined in the originating repository. May be
    // empty; that only degrades API-source classification.
    std::unordered_set<std::string> repo_symbols;
    bool passed_tests = true;
    std::optional<bool> verified_correct;
    std::optional<bool> no_extra_code;
};

struct LineSpan {
    int start_line = 0;
    int end_line = 0;
};

/// One detected inconsistency with evidence from both sides.
struct Finding {
    int type_id = 0;
    Dimension dimension{};
    Scope scope{};
    LineSpan ref_span;
    LineSpan cand_span;
    // Raw substrings of the two source texts.
    std::string ref_snippet;
    std::string cand_snippet;
    // Display string composed from the snippets, capped at 200 chars.
    std::string evidence;
    std::string rule_note;
};

enum class Verdict : uint8_t { ModelBetter, Tie, HumanBetter };

const char* verdict_name(Verdict v);

/// Per-feature numeric breakdown behind one verdict.
struct VerdictDetail {
    Verdict verdict = Verdict::Tie;
    double ref_score = 0.0;
    double cand_score = 0.0;
    std::vector<std::pair<std::string, std::pair<double, double>>> features;
};

/// All findings for one pair plus the three quality verdicts.
struct PairReport {
    std::string task_id;
    std::string model;
    std::string candidate_hash;  // digest of the candidate's canonical form
    std::vector<Finding> findings;
    std::set<int> distinct_types;
    bool inconsistent = false;
    VerdictDetail readability;
    VerdictDetail conciseness;
    VerdictDetail robustness;
};

/// Build a CodePair by parsing both sources. Throws ParseError or
/// NoFunctionError.
CodePair make_pair(std::string task_id, std::string model, std::string reference_code,
                   std::string candidate_code,
                   std::vector<std::string> repo_symbols = {});

}  // namespace stylediff
