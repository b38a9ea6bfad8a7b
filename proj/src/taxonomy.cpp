#include "stylediff/taxonomy.hpp"

#include "stylediff/errors.hpp"

namespace stylediff {

namespace {

constexpr Dimension kFmt = Dimension::Formatting;
constexpr Dimension kSem = Dimension::Semantic;
constexpr Dimension kExpr = Dimension::ExpressionStatement;
constexpr Dimension kCtl = Dimension::ControlFlow;
constexpr Dimension kFt = Dimension::FaultTolerance;

constexpr Scope kId = Scope::Identifier;
constexpr Scope kStmt = Scope::Statement;
constexpr Scope kBlk = Scope::Block;
constexpr Scope kMulti = Scope::MultiBlock;

const std::array<InconsistencyType, kTypeCount> kTaxonomy = {{
    {1, "Naming Format Inconsistency",
     "The two sides write the same identifier words under different case "
     "conventions, e.g. camelCase authorName versus snake_case author_name.",
     kFmt, kId},
    {2, "Space Inconsistency",
     "The two sides place whitespace differently around operators, colons, "
     "commas or brackets, before trailing comments, or use different "
     "indentation units.",
     kFmt, kStmt},
    {3, "Blank Line Inconsistency",
     "Matching adjacent statement groups are separated by different numbers "
     "of blank lines, e.g. one side separates blocks with a blank line and "
     "the other does not.",
     kFmt, kBlk},
    {4, "Inline Code Usage Inconsistency",
     "One side stores an expression in a single-use intermediate variable "
     "where the other side writes the expression inline.",
     kFmt, kStmt},
    {5, "Comment Format Inconsistency",
     "The two sides use different comment placements: own-line comments, "
     "trailing comments, or commented-out code present on one side only.",
     kFmt, kBlk},
    {6, "Statement Organization Inconsistency",
     "A matching logical statement occupies a single physical line on one "
     "side and is broken across several shorter lines on the other.",
     kFmt, kStmt},
    {7, "Naming Semantics Inconsistency",
     "Matching identifiers differ in meaningfulness: one side uses a generic "
     "or single-letter name such as i or tmp where the other uses a "
     "descriptive word such as index.",
     kSem, kId},
    {8, "Comment Semantics Inconsistency",
     "Matching comments differ in level of detail, or one side alone carries "
     "TODO/FIXME comments or comments that merely restate the adjacent "
     "statement.",
     kSem, kStmt},
    {9, "Assignment Inconsistency",
     "Matching assignments use different styles: augmented versus standard "
     "(x += 1 vs x = x + 1), chained, tuple-unpacking, or separate "
     "single-target statements.",
     kExpr, kStmt},
    {10, "Conditional Syntax Inconsistency",
     "One side uses conditional statements where the other expresses the "
     "same choice as a conditional expression.",
     kExpr, kStmt},
    {11, "Conditional Expression Inconsistency",
     "Matching integer comparisons of the same expression are written with "
     "different but equivalent bounds, e.g. len(a) > 1 versus len(a) >= 2.",
     kExpr, kStmt},
    {12, "Data Structure Construction Inconsistency",
     "The same collection is built through different construction styles: "
     "literal, constructor call, comprehension, generator, or an incremental "
     "append/insert loop.",
     kExpr, kStmt},
    {13, "API Preference Inconsistency",
     "The two sides reach the same step through callables from different "
     "sources: repository-defined functions, language built-ins, standard "
     "library, third-party code, or a hand-rolled reimplementation.",
     kExpr, kBlk},
    {14, "Advanced Syntax Usage Inconsistency",
     "Advanced syntax features such as lambdas, comprehensions, generator "
     "expressions, conditional expressions, unpacking, with-statements, or "
     "decorators appear on one side only.",
     kExpr, kStmt},
    {15, "Code Ordering Inconsistency",
     "Code groups with the same role on both sides, such as imports, "
     "validations, assignments, and loops, appear in a different relative "
     "order.",
     kExpr, kMulti},
    {16, "Loop Structure Inconsistency",
     "Matching loops differ in kind (for versus while) or one of them adds "
     "loop-control structure such as if-break, for-else, or while-else.",
     kCtl, kBlk},
    {17, "Conditional Structure Inconsistency",
     "Conditional logic is shaped differently: several nested or separate "
     "conditionals versus one combined condition, elif chains versus nested "
     "else-if, or guard returns versus full if/else.",
     kCtl, kBlk},
    {18, "Control Flow Structure Inconsistency",
     "The same guard is realized as a conditional check on one side and as a "
     "try-except on the other.",
     kCtl, kBlk},
    {19, "Input Validation Presence Inconsistency",
     "Only one side checks its parameters with leading conditionals before "
     "doing any work.",
     kFt, kBlk},
    {20, "Runtime Validation Presence Inconsistency",
     "Only one side performs defensive conditional checks in the body of the "
     "function.",
     kFt, kBlk},
    {21, "Exception Handling Presence Inconsistency",
     "Only one side wraps work in try-except to handle errors raised during "
     "execution.",
     kFt, kBlk},
    {22, "Input Validation Style Inconsistency",
     "Both sides validate inputs but differently: raising versus returning a "
     "sentinel, different exception classes, or different use of logging.",
     kFt, kBlk},
    {23, "Runtime Validation Style Inconsistency",
     "Both sides perform runtime checks but differently: raising versus "
     "returning a sentinel, different exception classes, or different use of "
     "logging.",
     kFt, kBlk},
    {24, "Exception Handling Style Inconsistency",
     "Both sides handle exceptions but differently: different caught or "
     "raised exception classes, different handler actions or logging, or "
     "try-else on one side only.",
     kFt, kBlk},
}};

}  // namespace

const std::array<InconsistencyType, kTypeCount>& list_taxonomy() { return kTaxonomy; }

const InconsistencyType& type_info(int type_id) {
    if (type_id < 1 || type_id > kTypeCount) throw UnknownTypeError(type_id);
    return kTaxonomy[type_id - 1];
}

Dimension dimension_of(int type_id) { return type_info(type_id).dimension; }

Scope scope_of(int type_id) { return type_info(type_id).scope; }

std::vector<int> types_in_dimension(Dimension d) {
    std::vector<int> out;
    for (const auto& t : kTaxonomy)
        if (t.dimension == d) out.push_back(t.id);
    return out;
}

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Formatting: return "Formatting";
        case Dimension::Semantic: return "Semantic";
        case Dimension::ExpressionStatement: return "Expression/Statement";
        case Dimension::ControlFlow: return "Control Flow";
        case Dimension::FaultTolerance: return "Fault Tolerance";
    }
    return "?";
}

const char* scope_name(Scope s) {
    switch (s) {
        case Scope::Identifier: return "identifier";
        case Scope::Statement: return "statement";
        case Scope::Block: return "block";
        case Scope::MultiBlock: return "multi-block";
    }
    return "?";
}

}  // namespace stylediff
