#pragma once

#include <string>
#include <vector>

#include "stylediff/source_unit.hpp"

namespace stylediff {

/// Coarse statement class used for alignment; assignment flavors share one
/// class so that, e.g., `x += 1` can align with `x = x + 1`.
enum class StmtClass : uint8_t {
    Assignment,
    Return,
    Raise,
    If,
    For,
    While,
    Try,
    With,
    Import,
    Expr,
    PassLike,  // pass/break/continue
    Other,
};

struct StmtEntry {
    int node = -1;
    StmtClass cls = StmtClass::Other;
    int depth = 0;       // nesting depth inside the focal body
    int parent = -1;     // enclosing block node
    int sibling_pos = 0; // position among the block's statements
};

/// Pre-order statement sequence of the focal function body.
std::vector<StmtEntry> flatten_focal(const SourceUnit& unit);

/// Indices into the two flattened sequences for statements matched by a
/// longest-common-subsequence over (class, depth). Unmatched regions stay
/// unaligned; detectors must not report identifier or statement findings
/// for them.
std::vector<std::pair<int, int>> align_statements(const std::vector<StmtEntry>& ref,
                                                  const std::vector<StmtEntry>& cand);

/// One aligned identifier occurrence pair.
struct NamePair {
    std::string ref_name;
    std::string cand_name;
    int ref_token = -1;
    int cand_token = -1;
    const char* role = "";
};

/// Identifiers aligned by parameter position, loop/with/except binding
/// order, then assignment targets within aligned statements. Deduplicated
/// by (ref_name, cand_name).
std::vector<NamePair> align_identifiers(const SourceUnit& ref, const SourceUnit& cand,
                                        const std::vector<StmtEntry>& ref_seq,
                                        const std::vector<StmtEntry>& cand_seq,
                                        const std::vector<std::pair<int, int>>& aligned);

/// Case convention classes for type 1.
enum class NameConvention : uint8_t {
    LowerSingle,   // one lowercase word: "total"
    SnakeCase,     // author_name
    CamelCase,     // authorName
    PascalCase,    // AuthorName
    ScreamingCase, // AUTHOR_NAME
    Other,
};

NameConvention name_convention(const std::string& name);

/// Split an identifier into lowercase words on underscores and case
/// boundaries: authorName -> {author, name}.
std::vector<std::string> split_identifier_words(const std::string& name);

}  // namespace stylediff
