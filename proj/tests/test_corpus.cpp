#include <string>

#include "doctest.h"
#include "stylediff/corpus.hpp"
#include "stylediff/errors.hpp"

using namespace stylediff;

namespace {

std::string record_line(const std::string& task, const std::string& model,
                        bool passed, const std::string& cand = "def f():\\n    pass\\n") {
    return "{\"task_id\":\"" + task + "\",\"model\":\"" + model +
           "\",\"reference_code\":\"def f():\\n    pass\\n\",\"candidate_code\":\"" +
           cand + "\",\"passed_tests\":" + (passed ? "true" : "false") + "}";
}

}  // namespace

TEST_CASE("well-formed three-line file loads three records") {
    std::string text = record_line("t1", "m1", true) + "\n" +
                       record_line("t2", "m1", false) + "\n" +
                       record_line("t3", "m2", true) + "\n";
    auto records = parse_corpus_text(text);
    REQUIRE(records.size() == 3);
    CHECK(records[0].task_id == "t1");
    CHECK(records[1].source_line == 2);
    CHECK_FALSE(records[1].passed_tests);
}

TEST_CASE("missing candidate_code is a SchemaError with the line number") {
    std::string text =
        record_line("t1", "m1", true) + "\n" +
        "{\"task_id\":\"t2\",\"model\":\"m\",\"reference_code\":\"def f():\\n"
        "    pass\\n\",\"passed_tests\":true}\n";
    try {
        parse_corpus_text(text);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("unknown fields are rejected") {
    std::string line =
        "{\"task_id\":\"t\",\"model\":\"m\",\"reference_code\":\"x\","
        "\"candidate_code\":\"y\",\"passed_tests\":true,\"surprise\":1}";
    CHECK_THROWS_AS(parse_corpus_text(line), SchemaError);
}

TEST_CASE("empty file gives an empty corpus") {
    CHECK(parse_corpus_text("").empty());
    CHECK(parse_corpus_text("\n\n").empty());
}

TEST_CASE("filter_passing keeps passing records in order") {
    std::string text;
    for (int i = 0; i < 10; ++i)
        text += record_line("t" + std::to_string(i), "m", i % 2 == 0) + "\n";
    auto records = filter_passing(parse_corpus_text(text));
    REQUIRE(records.size() == 5);
    CHECK(records[0].task_id == "t0");
    CHECK(records[4].task_id == "t8");
}

TEST_CASE("dedup merges identical candidates and keeps model list") {
    std::string text =
        record_line("t", "model-a", true, "def f():\\n    return 1\\n") + "\n" +
        record_line("t", "model-b", true, "def f():\\n    return 1   \\n") + "\n";
    auto records = dedup(parse_corpus_text(text));
    REQUIRE(records.size() == 1);
    CHECK(records[0].model == "model-a");
    REQUIRE(records[0].merged_models.size() == 2);
    CHECK(records[0].merged_models[0] == "model-a");
    CHECK(records[0].merged_models[1] == "model-b");
}

TEST_CASE("dedup never merges across task ids and is idempotent") {
    std::string text =
        record_line("t1", "m", true, "def f():\\n    return 1\\n") + "\n" +
        record_line("t2", "m", true, "def f():\\n    return 1\\n") + "\n";
    auto once = dedup(parse_corpus_text(text));
    CHECK(once.size() == 2);
    auto twice = dedup(once);
    REQUIRE(twice.size() == once.size());
    for (size_t i = 0; i < once.size(); ++i) {
        CHECK(twice[i].task_id == once[i].task_id);
        CHECK(twice[i].merged_models == once[i].merged_models);
    }
}

TEST_CASE("manual filters drop failed reviews and count unreviewed") {
    std::string text =
        "{\"task_id\":\"t1\",\"model\":\"m\",\"reference_code\":\"x\","
        "\"candidate_code\":\"y\",\"passed_tests\":true,"
        "\"verified_correct\":false}\n" +
        record_line("t2", "m", true) + "\n" +
        "{\"task_id\":\"t3\",\"model\":\"m\",\"reference_code\":\"x\","
        "\"candidate_code\":\"y\",\"passed_tests\":true,"
        "\"verified_correct\":true,\"no_extra_code\":false}\n" +
        "{\"task_id\":\"t4\",\"model\":\"m\",\"reference_code\":\"x\","
        "\"candidate_code\":\"y\",\"passed_tests\":true,"
        "\"verified_correct\":true,\"no_extra_code\":true}\n";
    int unreviewed = -1;
    auto records = apply_manual_filters(parse_corpus_text(text), &unreviewed);
    REQUIRE(records.size() == 2);
    CHECK(records[0].task_id == "t2");
    CHECK(records[1].task_id == "t4");
    CHECK(unreviewed == 1);
}

TEST_CASE("pipeline stages never grow the record list") {
    std::string text;
    for (int i = 0; i < 8; ++i)
        text += record_line("t" + std::to_string(i % 3), "m" + std::to_string(i % 2),
                            i % 4 != 0, "def f():\\n    return " +
                            std::to_string(i % 2) + "\\n") + "\n";
    auto loaded = parse_corpus_text(text);
    auto passed = filter_passing(loaded);
    auto unique = dedup(passed);
    auto reviewed = apply_manual_filters(unique);
    CHECK(passed.size() <= loaded.size());
    CHECK(unique.size() <= passed.size());
    CHECK(reviewed.size() <= unique.size());
}

TEST_CASE("prompt variants render distinctly with correct placement") {
    TaskPrompt task;
    task.signature = "def parse_config(path):";
    task.docstring = "Parse the configuration file at path.";
    task.concise_guideline = "Match the project's own coding style.";
    task.detailed_principles = {"Readability: name things clearly.",
                                "Conciseness: avoid redundant code.",
                                "Robustness: validate inputs."};

    std::string head_concise =
        render_enhanced_prompt(task, PromptVariant::HeadConcise);
    std::string head_detailed =
        render_enhanced_prompt(task, PromptVariant::HeadDetailed);
    std::string end_concise = render_enhanced_prompt(task, PromptVariant::EndConcise);
    std::string end_detailed =
        render_enhanced_prompt(task, PromptVariant::EndDetailed);

    // Pairwise distinct.
    CHECK(head_concise != head_detailed);
    CHECK(head_concise != end_concise);
    CHECK(head_concise != end_detailed);
    CHECK(head_detailed != end_concise);
    CHECK(head_detailed != end_detailed);
    CHECK(end_concise != end_detailed);

    // Head: guideline precedes the signature.
    CHECK(head_concise.find(task.concise_guideline) <
          head_concise.find(task.signature));
    // End: guideline inside the docstring, after the signature.
    CHECK(end_concise.find(task.signature) <
          end_concise.find(task.concise_guideline));
    size_t closing = end_concise.rfind("\"\"\"");
    CHECK(end_concise.find(task.concise_guideline) < closing);

    // Detailed variants contain all three principles.
    for (const std::string& p : task.detailed_principles) {
        CHECK(head_detailed.find(p) != std::string::npos);
        CHECK(end_detailed.find(p) != std::string::npos);
        CHECK(head_concise.find(p) == std::string::npos);
        CHECK(end_concise.find(p) == std::string::npos);
    }
}

TEST_CASE("prompt variant names parse") {
    CHECK(prompt_variant_from_name("head-concise") == PromptVariant::HeadConcise);
    CHECK(prompt_variant_from_name("end-detailed") == PromptVariant::EndDetailed);
    CHECK_FALSE(prompt_variant_from_name("sideways").has_value());
}

TEST_CASE("task prompt falls back to shipped default guidelines") {
    TaskPrompt t = TaskPrompt::from_json_text(
        "{\"signature\":\"def f(x):\",\"docstring\":\"Do f.\"}");
    CHECK(t.used_default_guideline);
    CHECK_FALSE(t.concise_guideline.empty());
    REQUIRE(t.detailed_principles.size() == 3);
}
