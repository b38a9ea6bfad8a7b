#include "stylediff/report.hpp"

#include <charconv>

#include "json.hpp"
#include "stylediff/taxonomy.hpp"
#include "stylediff/version.hpp"

namespace stylediff {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string number_text(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

ordered_json stats_json(const CorpusStats& stats) {
    ordered_json j;
    ordered_json ratios = ordered_json::object();
    for (const auto& [model, mr] : stats.per_model_ratio) {
        ratios[model] = {{"valid_count", mr.valid_count},
                         {"inconsistent_count", mr.inconsistent_count},
                         {"ratio", mr.ratio},
                         {"consistent_fraction", 1.0 - mr.ratio}};
    }
    j["per_model_ratio"] = std::move(ratios);

    ordered_json hist = ordered_json::object();
    for (const auto& [model, h] : stats.count_histogram) {
        ordered_json row = ordered_json::object();
        for (const auto& [k, frac] : h) row[std::to_string(k)] = frac;
        hist[model] = std::move(row);
    }
    j["count_histogram"] = std::move(hist);

    ordered_json freq = ordered_json::object();
    for (const auto& [model, f] : stats.type_frequency) {
        ordered_json row = ordered_json::object();
        for (const auto& [t, frac] : f) row[std::to_string(t)] = frac;
        freq[model] = std::move(row);
    }
    j["type_frequency"] = std::move(freq);

    ordered_json dim = ordered_json::object();
    for (const auto& [model, d] : stats.dimension_frequency) {
        ordered_json row = ordered_json::object();
        for (const auto& [dimension, value] : d)
            row[dimension_name(dimension)] = value;
        dim[model] = std::move(row);
    }
    j["dimension_frequency"] = std::move(dim);

    ordered_json stacked = ordered_json::object();
    for (const auto& [t, total] : stats.stacked_type_total)
        stacked[std::to_string(t)] = total;
    j["stacked_type_total"] = std::move(stacked);
    return j;
}

ordered_json tool_json(const DetectorConfig& config) {
    ordered_json j;
    j["name"] = kToolName;
    j["version"] = kToolVersion;
    j["report_schema"] = kReportSchemaVersion;
    j["config"] = ordered_json::parse(config.to_json_text());
    j["config_digest"] = config.digest();
    return j;
}

std::string emit_json(const CorpusStats& stats, const DetectorConfig& config,
                      const StageCounts& stage_counts) {
    ordered_json j;
    j["tool"] = tool_json(config);
    if (!stage_counts.empty()) {
        ordered_json sc = ordered_json::object();
        for (const auto& [k, v] : stage_counts) sc[k] = v;
        j["stage_counts"] = std::move(sc);
    }
    j["stats"] = stats_json(stats);
    return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string emit_csv(const CorpusStats& stats, const DetectorConfig& config,
                     const StageCounts& stage_counts) {
    std::string out;
    out += std::string("# tool: ") + kToolName + " " + kToolVersion + "\n";
    out += "# config_digest: " + config.digest() + "\n";
    for (const auto& [k, v] : stage_counts)
        out += "# stage: " + k + "=" + std::to_string(v) + "\n";
    out += "\n# per_model_ratio\n";
    out += "model,valid_count,inconsistent_count,ratio\n";
    for (const auto& [model, mr] : stats.per_model_ratio)
        out += csv_escape(model) + "," + std::to_string(mr.valid_count) + "," +
               std::to_string(mr.inconsistent_count) + "," + number_text(mr.ratio) +
               "\n";

    out += "\n# count_histogram\n";
    out += "model,distinct_types,fraction\n";
    for (const auto& [model, h] : stats.count_histogram)
        for (const auto& [k, frac] : h)
            out += csv_escape(model) + "," + std::to_string(k) + "," +
                   number_text(frac) + "\n";

    out += "\n# type_frequency\n";
    out += "model,type_id,type_name,fraction\n";
    for (const auto& [model, f] : stats.type_frequency)
        for (const auto& [t, frac] : f)
            out += csv_escape(model) + "," + std::to_string(t) + "," +
                   csv_escape(type_info(t).name) + "," + number_text(frac) + "\n";

    out += "\n# dimension_frequency\n";
    out += "model,dimension,value\n";
    for (const auto& [model, d] : stats.dimension_frequency)
        for (const auto& [dimension, value] : d)
            out += csv_escape(model) + "," + csv_escape(dimension_name(dimension)) +
                   "," + number_text(value) + "\n";

    out += "\n# stacked_type_total\n";
    out += "type_id,type_name,total\n";
    for (const auto& [t, total] : stats.stacked_type_total)
        out += std::to_string(t) + "," + csv_escape(type_info(t).name) + "," +
               number_text(total) + "\n";
    return out;
}

std::string emit_plotdata(const CorpusStats& stats, const DetectorConfig& config,
                          const StageCounts& stage_counts) {
    std::string out;
    out += std::string("# tool: ") + kToolName + " " + kToolVersion + "\n";
    out += "# config_digest: " + config.digest() + "\n";
    for (const auto& [k, v] : stage_counts)
        out += "# stage: " + k + "=" + std::to_string(v) + "\n";
    out += "statistic,model,key,value\n";
    for (const auto& [model, mr] : stats.per_model_ratio) {
        out += "per_model_ratio," + csv_escape(model) + ",valid_count," +
               std::to_string(mr.valid_count) + "\n";
        out += "per_model_ratio," + csv_escape(model) + ",inconsistent_count," +
               std::to_string(mr.inconsistent_count) + "\n";
        out += "per_model_ratio," + csv_escape(model) + ",ratio," +
               number_text(mr.ratio) + "\n";
    }
    for (const auto& [model, h] : stats.count_histogram)
        for (const auto& [k, frac] : h)
            out += "count_histogram," + csv_escape(model) + "," + std::to_string(k) +
                   "," + number_text(frac) + "\n";
    for (const auto& [model, f] : stats.type_frequency)
        for (const auto& [t, frac] : f)
            out += "type_frequency," + csv_escape(model) + "," +
                   csv_escape(type_info(t).name) + "," + number_text(frac) + "\n";
    for (const auto& [model, d] : stats.dimension_frequency)
        for (const auto& [dimension, value] : d)
            out += "dimension_frequency," + csv_escape(model) + "," +
                   csv_escape(dimension_name(dimension)) + "," + number_text(value) +
                   "\n";
    for (const auto& [t, total] : stats.stacked_type_total)
        out += "stacked_type_total,all," + csv_escape(type_info(t).name) + "," +
               number_text(total) + "\n";
    return out;
}

ordered_json verdict_json(const VerdictDetail& detail) {
    ordered_json j;
    j["verdict"] = verdict_name(detail.verdict);
    j["ref_score"] = detail.ref_score;
    j["cand_score"] = detail.cand_score;
    ordered_json features = ordered_json::object();
    for (const auto& [name, pair] : detail.features)
        features[name] = {{"ref", pair.first}, {"cand", pair.second}};
    j["features"] = std::move(features);
    return j;
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "plotdata") return ReportFormat::PlotData;
    return std::nullopt;
}

std::string emit_report(const CorpusStats& stats, ReportFormat format,
                        const DetectorConfig& config,
                        const StageCounts& stage_counts) {
    switch (format) {
        case ReportFormat::Json: return emit_json(stats, config, stage_counts);
        case ReportFormat::Csv: return emit_csv(stats, config, stage_counts);
        case ReportFormat::PlotData:
            return emit_plotdata(stats, config, stage_counts);
    }
    return "";
}

std::string render_pair_report(const PairReport& report,
                               const DetectorConfig& config) {
    ordered_json j;
    j["tool"] = tool_json(config);
    j["task_id"] = report.task_id;
    j["model"] = report.model;
    j["candidate_hash"] = report.candidate_hash;
    j["inconsistent"] = report.inconsistent;
    ordered_json types = ordered_json::array();
    for (int t : report.distinct_types) types.push_back(t);
    j["distinct_types"] = std::move(types);
    ordered_json findings = ordered_json::array();
    for (const Finding& f : report.findings) {
        ordered_json fj;
        fj["type_id"] = f.type_id;
        fj["type_name"] = type_info(f.type_id).name;
        fj["dimension"] = dimension_name(f.dimension);
        fj["scope"] = scope_name(f.scope);
        fj["ref_span"] = {f.ref_span.start_line, f.ref_span.end_line};
        fj["cand_span"] = {f.cand_span.start_line, f.cand_span.end_line};
        fj["evidence"] = f.evidence;
        fj["rule_note"] = f.rule_note;
        findings.push_back(std::move(fj));
    }
    j["findings"] = std::move(findings);
    j["quality"] = {{"readability", verdict_json(report.readability)},
                    {"conciseness", verdict_json(report.conciseness)},
                    {"robustness", verdict_json(report.robustness)}};
    return j.dump(2) + "\n";
}

}  // namespace stylediff
