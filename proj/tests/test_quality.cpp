#include <string>

#include "doctest.h"
#include "stylediff/quality.hpp"
#include "test_generators.hpp"

using namespace stylediff;

namespace {

const DetectorConfig kCfg = DetectorConfig::defaults();

CodePair pair_of(const std::string& ref, const std::string& cand) {
    return make_pair("t", "m", ref, cand);
}

Verdict mirrored(Verdict v) {
    if (v == Verdict::ModelBetter) return Verdict::HumanBetter;
    if (v == Verdict::HumanBetter) return Verdict::ModelBetter;
    return Verdict::Tie;
}

CodePair swapped(const CodePair& p) {
    CodePair s;
    s.task_id = p.task_id;
    s.model = p.model;
    s.reference = p.candidate;
    s.candidate = p.reference;
    s.repo_symbols = p.repo_symbols;
    return s;
}

}  // namespace

TEST_CASE("identical sides tie on all three metrics") {
    CodePair p = pair_of("def f(a):\n    return a + 1\n",
                         "def f(a):\n    return a + 1\n");
    CHECK(compare_readability(p, kCfg).verdict == Verdict::Tie);
    CHECK(compare_conciseness(p, kCfg).verdict == Verdict::Tie);
    CHECK(compare_robustness(p, kCfg).verdict == Verdict::Tie);
}

TEST_CASE("meaningful comments raise readability") {
    CodePair p = pair_of(
        "def f(values):\n    total = sum(values)\n    return total\n",
        "def f(values):\n    # add every entry of the list\n"
        "    total = sum(values)\n    return total\n");
    CHECK(compare_readability(p, kCfg).verdict == Verdict::ModelBetter);
}

TEST_CASE("single-letter names lower readability") {
    CodePair p = pair_of(
        "def f(items):\n    for element in items:\n        print(element)\n",
        "def f(items):\n    for e in items:\n        print(e)\n");
    VerdictDetail d = compare_readability(p, kCfg);
    CHECK(d.verdict == Verdict::HumanBetter);
    // Only the identifier feature differs.
    for (const auto& [name, values] : d.features) {
        if (name == "descriptive_identifier_ratio")
            CHECK(values.first > values.second);
        else
            CHECK(values.first == values.second);
    }
}

TEST_CASE("intermediate split lowers conciseness") {
    CodePair p = pair_of(
        "def f(a, b):\n    return a + b\n",
        "def f(a, b):\n    result = a + b\n    return result\n");
    CHECK(compare_conciseness(p, kCfg).verdict == Verdict::HumanBetter);
}

TEST_CASE("comprehension beats append loop on conciseness") {
    CodePair p = pair_of(
        "def f(xs):\n    out = []\n    for x in xs:\n        out.append(x * 2)\n"
        "    return out\n",
        "def f(xs):\n    return [x * 2 for x in xs]\n");
    CHECK(compare_conciseness(p, kCfg).verdict == Verdict::ModelBetter);
}

TEST_CASE("try-except raises robustness") {
    CodePair p = pair_of(
        "def f(a, b):\n    return a / b\n",
        "def f(a, b):\n    try:\n        return a / b\n"
        "    except ZeroDivisionError:\n        return None\n");
    CHECK(compare_robustness(p, kCfg).verdict == Verdict::ModelBetter);
}

TEST_CASE("missing parameter checks lower robustness by two mechanisms") {
    CodePair p = pair_of(
        "def f(a, b):\n    if a is None:\n        raise ValueError(\"a\")\n"
        "    if b is None:\n        raise ValueError(\"b\")\n    return a + b\n",
        "def f(a, b):\n    return a + b\n");
    VerdictDetail d = compare_robustness(p, kCfg);
    CHECK(d.verdict == Verdict::HumanBetter);
    CHECK(d.ref_score - d.cand_score == 2.0);
}

TEST_CASE("robustness verdict agrees with mechanism count sign") {
    test_support::Rng rng(31337);
    for (int i = 0; i < 100; ++i) {
        CodePair p = pair_of(test_support::random_function(rng),
                             test_support::random_function(rng));
        VerdictDetail d = compare_robustness(p, kCfg);
        if (d.cand_score > d.ref_score)
            CHECK(d.verdict == Verdict::ModelBetter);
        else if (d.cand_score < d.ref_score)
            CHECK(d.verdict == Verdict::HumanBetter);
        else
            CHECK(d.verdict == Verdict::Tie);
    }
}

TEST_CASE("antisymmetry under side swap on random pairs") {
    test_support::Rng rng(777);
    for (int i = 0; i < 120; ++i) {
        CodePair p = pair_of(test_support::random_function(rng),
                             test_support::random_function(rng));
        CodePair s = swapped(p);
        CHECK(compare_readability(s, kCfg).verdict ==
              mirrored(compare_readability(p, kCfg).verdict));
        CHECK(compare_conciseness(s, kCfg).verdict ==
              mirrored(compare_conciseness(p, kCfg).verdict));
        CHECK(compare_robustness(s, kCfg).verdict ==
              mirrored(compare_robustness(p, kCfg).verdict));
    }
}
