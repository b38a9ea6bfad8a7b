#pragma once

#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stylediff/name_lists.hpp"
#include "stylediff/source_unit.hpp"

namespace stylediff {

/// Depth-first walk over a subtree (node itself included).
void walk(const SourceUnit& unit, int node, const std::function<void(int)>& fn);

std::vector<int> descendants_of_kind(const SourceUnit& unit, int root, NodeKind kind);
bool contains_kind(const SourceUnit& unit, int root, NodeKind kind);

/// Focal function body block, or -1.
int focal_body(const SourceUnit& unit);

/// Parameter names of the focal function.
std::vector<std::string> focal_param_names(const SourceUnit& unit);

/// Logical statements in the focal function, docstring excluded.
int logical_statement_count(const SourceUnit& unit);

/// Deepest block nesting inside the focal body (0 = flat).
int max_nesting_depth(const SourceUnit& unit);

/// All identifier tokens referenced in a subtree.
std::set<std::string> names_in(const SourceUnit& unit, int node);

/// Space-joined lexemes of a node's tokens, whitespace-insensitive.
std::string lexeme_signature(const SourceUnit& unit, int node);

// ---------------------------------------------------------------- calls ----

struct CallSite {
    int node = -1;          // Call node
    int stmt = -1;          // enclosing statement entry (filled by callers)
    std::string callee;     // called name or attribute name
    std::string receiver_root;  // leftmost name of an attribute chain
    bool is_attribute = false;
};

std::vector<CallSite> collect_calls(const SourceUnit& unit, int root);

ApiSource classify_call(const CallSite& call,
                        const std::unordered_set<std::string>& repo_symbols,
                        const std::vector<std::string>& local_defs,
                        const std::string& focal_name);

// ------------------------------------------------- single-use variables ----

struct Intermediate {
    int assign_node = -1;
    std::string name;
    int rhs_node = -1;
    int uses = 0;  // reads after the assignment
};

/// Assignments to a simple name whose value is read exactly once afterward
/// in the focal function. Parameters are excluded.
std::vector<Intermediate> single_use_intermediates(const SourceUnit& unit);

// ------------------------------------------------------- fault tolerance ----

struct GuardInfo {
    int node = -1;  // If node
    bool raises = false;
    bool returns_sentinel = false;
    bool logs = false;
    std::set<std::string> raised_classes;
};

struct HandlerInfo {
    int node = -1;  // Try node
    std::set<std::string> caught_classes;
    bool raises = false;
    bool returns_sentinel = false;
    bool logs = false;
    bool has_else = false;
    std::set<std::string> raised_classes;
};

/// Input validation: leading conditionals over parameters only. Runtime
/// validation: other defensive conditionals (guard action plus a validity
/// test). Exception handling: try statements.
struct FaultProfile {
    std::vector<GuardInfo> input_validations;
    std::vector<GuardInfo> runtime_validations;
    std::vector<HandlerInfo> handlers;
    int mechanism_count() const {
        return static_cast<int>(input_validations.size() +
                                runtime_validations.size() + handlers.size());
    }
};

FaultProfile fault_profile(const SourceUnit& unit);

// ------------------------------------------------------ advanced syntax ----

struct FeatureSet {
    bool lambda_expr = false;
    bool comprehension = false;
    bool generator_expr = false;
    bool conditional_expr = false;
    bool unpacking = false;
    bool with_statement = false;
    bool decorator = false;

    std::vector<std::string> names() const;
};

FeatureSet advanced_features(const SourceUnit& unit);

// ---------------------------------------------------------- comparisons ----

struct ComparisonFact {
    int node = -1;
    std::string left_signature;
    std::string op;  // one of < > <= >=
    long long literal = 0;
};

/// Comparisons of an expression against a plain integer literal.
std::vector<ComparisonFact> integer_comparisons(const SourceUnit& unit);

// ----------------------------------------------------------- collections ----

enum class BuildClass : uint8_t {
    Literal,
    Constructor,
    Comprehension,
    Generator,
    IncrementalLoop,
};

const char* build_class_name(BuildClass c);

struct CollectionBuild {
    std::string role;  // normalized variable words, or "<return>"
    BuildClass cls{};
    int node = -1;
};

std::vector<CollectionBuild> collection_builds(const SourceUnit& unit);

/// Normalize an identifier for role matching: words joined by '_'.
std::string normalized_words(const std::string& name);

}  // namespace stylediff
