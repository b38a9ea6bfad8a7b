#include "stylediff/quality.hpp"

#include <algorithm>
#include <cmath>

#include "stylediff/align.hpp"
#include "stylediff/analysis.hpp"

namespace stylediff {

namespace {

bool generic_name(const std::string& name, const DetectorConfig& cfg) {
    if (name.size() == 1) return true;
    std::string norm = normalized_words(name);
    for (const std::string& g : cfg.generic_identifiers)
        if (norm == g) return true;
    return false;
}

// Identifiers bound in the focal function: parameters, assignment targets,
// loop and with bindings.
std::set<std::string> bound_identifiers(const SourceUnit& u) {
    std::set<std::string> out;
    for (const std::string& p : focal_param_names(u)) out.insert(p);
    int body = focal_body(u);
    if (body < 0) return out;
    auto add_names = [&](int expr) {
        for (const std::string& nm : names_in(u, expr)) out.insert(nm);
    };
    for (int a : descendants_of_kind(u, body, NodeKind::Assign))
        if (!u.nodes[a].kids.empty()) add_names(u.nodes[a].kids[0]);
    for (int f : descendants_of_kind(u, body, NodeKind::For))
        if (!u.nodes[f].kids.empty()) add_names(u.nodes[f].kids[0]);
    for (int w : descendants_of_kind(u, body, NodeKind::WithItem))
        if (u.nodes[w].kids.size() > 1) add_names(u.nodes[w].kids[1]);
    return out;
}

double readability_score(const SourceUnit& u, const DetectorConfig& cfg,
                         std::vector<std::pair<std::string, double>>& features) {
    std::set<std::string> ids = bound_identifiers(u);
    double descriptive = 0;
    for (const std::string& id : ids)
        if (!generic_name(id, cfg)) ++descriptive;
    double id_ratio = ids.empty() ? 1.0 : descriptive / static_cast<double>(ids.size());

    int meaningful = 0;
    for (const CommentInfo& c : u.comments)
        if (!c.todo && !c.useless && c.category != CommentCategory::CommentedOutCode)
            ++meaningful;
    int stmts = std::max(1, logical_statement_count(u));
    double comment_density =
        std::min(1.0, static_cast<double>(meaningful) / static_cast<double>(stmts));

    int long_lines = 0, code_lines = 0;
    for (int line = 1; line <= u.line_count(); ++line) {
        std::string text = u.line_text(line);
        if (text.find_first_not_of(" \t") == std::string::npos) continue;
        ++code_lines;
        if (static_cast<int>(text.size()) > cfg.long_line_limit) ++long_lines;
    }
    double long_frac =
        code_lines == 0 ? 0.0
                        : static_cast<double>(long_lines) / static_cast<double>(code_lines);

    double nesting = std::min(1.0, max_nesting_depth(u) / 10.0);

    features.emplace_back("descriptive_identifier_ratio", id_ratio);
    features.emplace_back("meaningful_comment_density", comment_density);
    features.emplace_back("long_line_fraction", long_frac);
    features.emplace_back("nesting_penalty", nesting);

    return cfg.weight_identifiers * id_ratio + cfg.weight_comments * comment_density -
           cfg.weight_line_length * long_frac - cfg.weight_nesting * nesting;
}

VerdictDetail banded_verdict(double ref_score, double cand_score, double band) {
    VerdictDetail detail;
    detail.ref_score = ref_score;
    detail.cand_score = cand_score;
    double eps = band * std::max(std::fabs(ref_score), std::fabs(cand_score));
    if (std::fabs(cand_score - ref_score) <= eps)
        detail.verdict = Verdict::Tie;
    else
        detail.verdict =
            cand_score > ref_score ? Verdict::ModelBetter : Verdict::HumanBetter;
    return detail;
}

void merge_features(VerdictDetail& detail,
                    const std::vector<std::pair<std::string, double>>& ref_features,
                    const std::vector<std::pair<std::string, double>>& cand_features) {
    for (size_t i = 0; i < ref_features.size() && i < cand_features.size(); ++i)
        detail.features.emplace_back(
            ref_features[i].first,
            std::make_pair(ref_features[i].second, cand_features[i].second));
}

}  // namespace

VerdictDetail compare_readability(const CodePair& pair, const DetectorConfig& config) {
    std::vector<std::pair<std::string, double>> rf, cf;
    double rs = readability_score(pair.reference, config, rf);
    double cs = readability_score(pair.candidate, config, cf);
    VerdictDetail detail = banded_verdict(rs, cs, config.tie_band_fraction);
    merge_features(detail, rf, cf);
    return detail;
}

VerdictDetail compare_conciseness(const CodePair& pair, const DetectorConfig& config) {
    (void)config;
    auto score = [](const SourceUnit& u) {
        return static_cast<double>(logical_statement_count(u) +
                                   static_cast<int>(single_use_intermediates(u).size()));
    };
    double rs = score(pair.reference);
    double cs = score(pair.candidate);
    VerdictDetail detail;
    detail.ref_score = rs;
    detail.cand_score = cs;
    if (rs == cs)
        detail.verdict = Verdict::Tie;
    else
        detail.verdict = cs < rs ? Verdict::ModelBetter : Verdict::HumanBetter;
    detail.features.emplace_back(
        "logical_statements",
        std::make_pair(static_cast<double>(logical_statement_count(pair.reference)),
                       static_cast<double>(logical_statement_count(pair.candidate))));
    detail.features.emplace_back(
        "single_use_intermediates",
        std::make_pair(
            static_cast<double>(single_use_intermediates(pair.reference).size()),
            static_cast<double>(single_use_intermediates(pair.candidate).size())));
    return detail;
}

VerdictDetail compare_robustness(const CodePair& pair, const DetectorConfig& config) {
    (void)config;
    FaultProfile rp = fault_profile(pair.reference);
    FaultProfile cp = fault_profile(pair.candidate);
    double rs = rp.mechanism_count();
    double cs = cp.mechanism_count();
    VerdictDetail detail;
    detail.ref_score = rs;
    detail.cand_score = cs;
    if (rs == cs)
        detail.verdict = Verdict::Tie;
    else
        detail.verdict = cs > rs ? Verdict::ModelBetter : Verdict::HumanBetter;
    detail.features.emplace_back(
        "input_validations",
        std::make_pair(static_cast<double>(rp.input_validations.size()),
                       static_cast<double>(cp.input_validations.size())));
    detail.features.emplace_back(
        "runtime_validations",
        std::make_pair(static_cast<double>(rp.runtime_validations.size()),
                       static_cast<double>(cp.runtime_validations.size())));
    detail.features.emplace_back(
        "exception_handlers",
        std::make_pair(static_cast<double>(rp.handlers.size()),
                       static_cast<double>(cp.handlers.size())));
    return detail;
}

}  // namespace stylediff
