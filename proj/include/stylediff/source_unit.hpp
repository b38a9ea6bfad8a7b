#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stylediff/syntax_tree.hpp"
#include "stylediff/token.hpp"

namespace stylediff {

enum class CommentCategory : uint8_t {
    Interline,       // a comment occupying its own line
    InlineTrailing,  // a comment following code on the same line
    CommentedOutCode,
    Docstring,  // reserved; '#' comments never classify here
};

const char* comment_category_name(CommentCategory category);

struct CommentInfo {
    CommentCategory category;
    int line = 0;
    int token_index = -1;
    std::string text;    // full lexeme including '#'
    std::string body;    // text after '#' and one optional space
    bool todo = false;   // TODO/FIXME prefix
    bool useless = false;  // restates the adjacent statement verbatim
    int node = -1;         // CommentNode arena index
};

/// One logical statement line: a simple statement, or the header of a
/// compound statement. Physical lines joined by explicit or implicit
/// continuations map to the same entry.
struct LogicalLine {
    int node = -1;
    int first_line = 0;
    int last_line = 0;
};

/// Lossless, trivia-preserving representation of one parsed source text.
struct SourceUnit {
    std::string raw_text;
    std::vector<Token> tokens;
    std::vector<Node> nodes;
    int root = -1;
    int focal_func = -1;  // node index of the focal function definition
    std::vector<CommentInfo> comments;
    std::vector<LogicalLine> logical_lines;
    std::unordered_map<int, int> line_to_logical;  // physical line -> logical index
    std::vector<std::string> top_level_def_names;
    std::vector<std::pair<size_t, size_t>> line_spans;  // byte [begin,end) per line

    const Node& node(int idx) const { return nodes[idx]; }
    const Token& token(int idx) const { return tokens[idx]; }

    /// Raw source slice covering a node, trimmed of surrounding whitespace.
    std::string text_of(int node_idx) const;
    /// Raw text of one physical line (1-based), without the terminator.
    std::string line_text(int line) const;
    int line_count() const { return static_cast<int>(line_spans.size()); }

    /// Children of a block-like node with CommentNode entries filtered out.
    std::vector<int> statements_of(int block_idx) const;
};

/// Parse source text into a SourceUnit. The first top-level function
/// definition becomes the focal function; if none is top-level, the first
/// function definition anywhere is used. Throws ParseError or
/// NoFunctionError.
SourceUnit parse_source(std::string text);

/// One entry per comment token: (category, 1-based line, full text).
std::vector<CommentInfo> comment_inventory(const SourceUnit& unit);

}  // namespace stylediff
