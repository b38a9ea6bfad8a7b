#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stylediff/corpus.hpp"
#include "stylediff/detectors.hpp"
#include "stylediff/errors.hpp"
#include "stylediff/report.hpp"
#include "stylediff/version.hpp"

using namespace stylediff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

void diag(const std::string& kind, const std::string& msg,
          const std::string& file = "", int line = -1) {
    std::ostringstream out;
    out << kToolName << ": error kind=" << kind;
    if (!file.empty()) out << " file=" << file;
    if (line >= 0) out << " line=" << line;
    out << " msg=\"" << msg << "\"";
    std::cerr << out.str() << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

// Report files appear atomically; partial outputs are never visible.
void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write file: " + tmp);
        out << content;
        if (!out.good()) throw IoError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

DetectorConfig load_config(const std::string& flag_path) {
    if (!flag_path.empty()) return DetectorConfig::load_file(flag_path);
    if (const char* env = std::getenv("STYLEDIFF_CONFIG"))
        if (*env) return DetectorConfig::load_file(env);
    return DetectorConfig::defaults();
}

std::vector<std::string> load_symbol_file(const std::string& path) {
    std::vector<std::string> out;
    if (path.empty()) return out;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

int cmd_taxonomy(const std::string& format, const std::string& dimension_filter) {
    bool machine = format == "json";
    std::optional<Dimension> only;
    if (!dimension_filter.empty()) {
        for (Dimension d : {Dimension::Formatting, Dimension::Semantic,
                            Dimension::ExpressionStatement, Dimension::ControlFlow,
                            Dimension::FaultTolerance}) {
            std::string name = dimension_name(d);
            std::string flat;
            for (char c : name)
                if (c != '/' && c != ' ') flat += static_cast<char>(std::tolower(c));
            std::string want;
            for (char c : dimension_filter)
                if (c != '-' && c != '_' && c != '/' && c != ' ')
                    want += static_cast<char>(std::tolower(c));
            if (flat == want) only = d;
        }
        if (!only) {
            diag("usage", "unknown dimension: " + dimension_filter);
            return kExitInput;
        }
    }
    if (machine) {
        std::string out = "[\n";
        bool first = true;
        for (const auto& t : list_taxonomy()) {
            if (only && t.dimension != *only) continue;
            if (!first) out += ",\n";
            first = false;
            out += "  {\"id\": " + std::to_string(t.id) + ", \"name\": \"" +
                   t.name + "\", \"dimension\": \"" +
                   dimension_name(t.dimension) + "\", \"scope\": \"" +
                   scope_name(t.scope) + "\", \"definition\": \"";
            for (char c : std::string(t.definition)) {
                if (c == '"') out += "\\\"";
                else out += c;
            }
            out += "\"}";
        }
        out += "\n]\n";
        std::fputs(out.c_str(), stdout);
        return kExitOk;
    }
    for (const auto& t : list_taxonomy()) {
        if (only && t.dimension != *only) continue;
        std::printf("%2d  %-42s %-20s %-11s %s\n", t.id, t.name,
                    dimension_name(t.dimension), scope_name(t.scope), t.definition);
    }
    return kExitOk;
}

int cmd_analyze_pair(const std::string& ref_path, const std::string& cand_path,
                     const std::string& config_path, const std::string& symbols_path,
                     const std::string& format, bool gate) {
    DetectorConfig cfg = load_config(config_path);
    CodePair pair;
    try {
        pair = make_pair(ref_path, "-", read_file(ref_path), read_file(cand_path),
                         load_symbol_file(symbols_path));
    } catch (const ParseError& e) {
        diag("parse", e.what(), "", e.line());
        return kExitInput;
    } catch (const NoFunctionError& e) {
        diag("no-function", e.what());
        return kExitInput;
    } catch (const IoError& e) {
        diag("io", e.what());
        return kExitInput;
    }
    PairReport report = detect_all(pair, cfg);
    if (format == "json") {
        std::fputs(render_pair_report(report, cfg).c_str(), stdout);
    } else {
        std::printf("reference: %s\ncandidate: %s\n", ref_path.c_str(),
                    cand_path.c_str());
        std::printf("findings: %zu\n", report.findings.size());
        for (const Finding& f : report.findings) {
            std::printf("  [%2d] %s (%s, %s) ref:%d-%d cand:%d-%d  %s  (%s)\n",
                        f.type_id, type_info(f.type_id).name,
                        dimension_name(f.dimension), scope_name(f.scope),
                        f.ref_span.start_line, f.ref_span.end_line,
                        f.cand_span.start_line, f.cand_span.end_line,
                        f.evidence.c_str(), f.rule_note.c_str());
        }
        std::printf("quality: readability=%s conciseness=%s robustness=%s\n",
                    verdict_name(report.readability.verdict),
                    verdict_name(report.conciseness.verdict),
                    verdict_name(report.robustness.verdict));
    }
    if (gate && report.inconsistent) return kExitFindings;
    return kExitOk;
}

int cmd_analyze_corpus(const std::string& corpus_path, const std::string& out_path,
                       const std::string& config_path, const std::string& format,
                       bool no_dedup, bool no_manual_filters, unsigned jobs) {
    DetectorConfig cfg = load_config(config_path);
    auto fmt = report_format_from_name(format);
    if (!fmt) {
        diag("usage", "unknown format: " + format);
        return kExitInput;
    }

    std::vector<CorpusRecord> records = load_corpus(corpus_path);
    StageCounts counts;
    counts["01_loaded"] = static_cast<long long>(records.size());
    std::printf("loaded: %zu\n", records.size());

    records = filter_passing(std::move(records));
    counts["02_passed_tests"] = static_cast<long long>(records.size());
    std::printf("passed-tests: %zu\n", records.size());

    if (!no_dedup) {
        records = dedup(std::move(records));
        std::printf("unique-samples: %zu\n", records.size());
    }
    counts["03_unique"] = static_cast<long long>(records.size());

    int unreviewed = 0;
    if (!no_manual_filters) {
        records = apply_manual_filters(std::move(records), &unreviewed);
        std::printf("after-manual-filters: %zu (unreviewed: %d)\n", records.size(),
                    unreviewed);
    }
    counts["04_reviewed"] = static_cast<long long>(records.size());

    // Parallel detection over records, merged in deterministic input order.
    struct Slot {
        PairReport report;
        bool failed = false;
        std::string error;
        int line = 0;
    };
    std::vector<Slot> slots(records.size());
    unsigned workers = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                 : jobs;
    workers = std::min<unsigned>(workers, std::max<size_t>(records.size(), 1));
    std::atomic<size_t> next{0};
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= records.size()) break;
            const CorpusRecord& rec = records[i];
            try {
                CodePair pair = make_pair(rec.task_id, rec.model, rec.reference_code,
                                          rec.candidate_code, rec.repo_symbols);
                pair.passed_tests = rec.passed_tests;
                pair.verified_correct = rec.verified_correct;
                pair.no_extra_code = rec.no_extra_code;
                slots[i].report = detect_all(pair, cfg);
            } catch (const ParseError& e) {
                slots[i].failed = true;
                slots[i].error = e.what();
                slots[i].line = rec.source_line;
            } catch (const NoFunctionError& e) {
                slots[i].failed = true;
                slots[i].error = e.what();
                slots[i].line = rec.source_line;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].failed) {
            diag("record", slots[i].error, corpus_path, slots[i].line);
            return kExitInput;
        }
    }

    // Expand merged occurrences so per-model denominators count every
    // surviving sample, not just unique representatives.
    std::vector<PairReport> reports;
    long long inconsistent = 0;
    for (size_t i = 0; i < slots.size(); ++i) {
        for (const std::string& model : records[i].merged_models) {
            PairReport r = slots[i].report;
            r.model = model;
            if (r.inconsistent) ++inconsistent;
            reports.push_back(std::move(r));
        }
    }
    counts["05_report_occurrences"] = static_cast<long long>(reports.size());
    std::printf("analyzed-pairs: %zu\n", records.size());
    std::printf("report-occurrences: %zu (inconsistent: %lld)\n", reports.size(),
                inconsistent);

    if (reports.empty()) {
        diag("empty", "no records survived the pipeline; nothing to report");
        return kExitInput;
    }
    CorpusStats stats = compute_stats(reports);
    write_file_atomic(out_path, emit_report(stats, *fmt, cfg, counts));
    std::printf("report: %s\n", out_path.c_str());
    return kExitOk;
}

int cmd_render_prompt(const std::string& task_path, const std::string& variant_name) {
    auto variant = prompt_variant_from_name(variant_name);
    if (!variant) {
        diag("usage", "unknown variant: " + variant_name +
                          " (expected head-concise|head-detailed|end-concise|"
                          "end-detailed)");
        return kExitInput;
    }
    TaskPrompt task = TaskPrompt::load_file(task_path);
    if (task.used_default_guideline)
        std::cerr << kToolName
                  << ": note guideline=default (task file carried no custom "
                     "style guideline)\n";
    std::fputs(render_enhanced_prompt(task, *variant).c_str(), stdout);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential coding-style analyzer for function pairs"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto* taxonomy = app.add_subcommand("taxonomy", "List the inconsistency types");
    std::string tax_format = "text";
    std::string tax_dimension;
    taxonomy->add_option("--format", tax_format, "text or json");
    taxonomy->add_option("--dimension", tax_dimension,
                         "only one dimension (e.g. formatting, fault-tolerance)");

    auto* pair_cmd =
        app.add_subcommand("analyze-pair", "Compare one reference/candidate pair");
    std::string ref_path, cand_path, pair_config, pair_symbols;
    std::string pair_format = "text";
    bool gate = false;
    pair_cmd->add_option("reference", ref_path, "reference source file")->required();
    pair_cmd->add_option("candidate", cand_path, "candidate source file")->required();
    pair_cmd->add_option("--config", pair_config, "detector config JSON");
    pair_cmd->add_option("--repo-symbols", pair_symbols,
                         "file of repository symbol names, one per line");
    pair_cmd->add_option("--format", pair_format, "text or json");
    pair_cmd->add_flag("--gate", gate, "exit 1 when findings are present");

    auto* corpus_cmd =
        app.add_subcommand("analyze-corpus", "Run the corpus pipeline");
    std::string corpus_path, out_path = "report.json", corpus_config;
    std::string corpus_format = "json";
    bool no_dedup = false, no_manual = false;
    unsigned jobs = 0;
    corpus_cmd->add_option("corpus", corpus_path, "line-delimited corpus file")
        ->required();
    corpus_cmd->add_option("-o,--out", out_path, "report output path");
    corpus_cmd->add_option("--config", corpus_config, "detector config JSON");
    corpus_cmd->add_option("--format", corpus_format, "json, csv, or plotdata");
    corpus_cmd->add_flag("--no-dedup", no_dedup, "skip identical-sample merging");
    corpus_cmd->add_flag("--no-manual-filters", no_manual,
                         "skip the manual-review filter stage");
    corpus_cmd->add_option("--jobs", jobs, "worker threads (default: all cores)");

    auto* prompt_cmd =
        app.add_subcommand("render-prompt", "Render an enhanced prompt variant");
    std::string task_path, variant_name;
    prompt_cmd->add_option("task", task_path, "task prompt JSON file")->required();
    prompt_cmd->add_option("--variant", variant_name,
                           "head-concise|head-detailed|end-concise|end-detailed")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
        app.exit(e);
        return kExitInput;
    }

    try {
        if (taxonomy->parsed()) return cmd_taxonomy(tax_format, tax_dimension);
        if (pair_cmd->parsed())
            return cmd_analyze_pair(ref_path, cand_path, pair_config, pair_symbols,
                                    pair_format, gate);
        if (corpus_cmd->parsed())
            return cmd_analyze_corpus(corpus_path, out_path, corpus_config,
                                      corpus_format, no_dedup, no_manual, jobs);
        if (prompt_cmd->parsed()) return cmd_render_prompt(task_path, variant_name);
    } catch (const SchemaError& e) {
        diag("schema", e.what(), "", e.line());
        return kExitInput;
    } catch (const ParseError& e) {
        diag("parse", e.what(), "", e.line());
        return kExitInput;
    } catch (const IoError& e) {
        diag("io", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        diag("internal", e.what());
        return kExitInternal;
    }
    return kExitOk;
}
