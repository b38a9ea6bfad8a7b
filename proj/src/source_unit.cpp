#include "stylediff/source_unit.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "stylediff/errors.hpp"
#include "stylediff/lexer.hpp"

namespace stylediff {

namespace detail {
int run_parser(const std::vector<Token>& tokens, std::vector<Node>& nodes);
}

namespace {

bool is_code_token(TokenKind k) {
    switch (k) {
        case TokenKind::Name:
        case TokenKind::Keyword:
        case TokenKind::Number:
        case TokenKind::String:
        case TokenKind::Op:
            return true;
        default:
            return false;
    }
}

bool is_statement_kind(NodeKind k) {
    switch (k) {
        case NodeKind::FuncDef:
        case NodeKind::ClassDef:
        case NodeKind::ExprStmt:
        case NodeKind::Assign:
        case NodeKind::AugAssign:
        case NodeKind::AnnAssign:
        case NodeKind::Return:
        case NodeKind::Raise:
        case NodeKind::Pass:
        case NodeKind::Break:
        case NodeKind::Continue:
        case NodeKind::If:
        case NodeKind::For:
        case NodeKind::While:
        case NodeKind::Try:
        case NodeKind::With:
        case NodeKind::Import:
        case NodeKind::ImportFrom:
        case NodeKind::Global:
        case NodeKind::Del:
        case NodeKind::Assert:
        case NodeKind::Opaque:
            return true;
        default:
            return false;
    }
}

// Comment body parses as a statement or an expression, excluding a bare
// single atom, so prose like "# counter" is not mistaken for code.
bool body_parses_as_code(const std::string& body) {
    std::string trimmed = body;
    size_t b = trimmed.find_first_not_of(" \t");
    if (b == std::string::npos) return false;
    size_t e = trimmed.find_last_not_of(" \t");
    trimmed = trimmed.substr(b, e - b + 1);
    if (trimmed.empty()) return false;
    try {
        std::vector<Token> toks = tokenize(trimmed);
        std::vector<Node> nodes;
        int root = detail::run_parser(toks, nodes);
        const Node& mod = nodes[root];
        if (mod.kids.empty()) return false;
        for (int k : mod.kids)
            if (nodes[k].kind == NodeKind::Opaque) return false;
        if (mod.kids.size() == 1 && nodes[mod.kids[0]].kind == NodeKind::ExprStmt) {
            const Node& stmt = nodes[mod.kids[0]];
            if (stmt.kids.size() == 1) {
                NodeKind ek = nodes[stmt.kids[0]].kind;
                if (ek == NodeKind::NameExpr || ek == NodeKind::NumberLit ||
                    ek == NodeKind::StringLit || ek == NodeKind::ConstLit)
                    return false;
            }
        }
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Keep only alphanumerics, lowercased, for restated-comment comparison.
std::string squeeze_alnum(const std::string& s) {
    std::string out;
    for (unsigned char c : s)
        if (std::isalnum(c)) out += static_cast<char>(std::tolower(c));
    return out;
}

}  // namespace

std::string SourceUnit::text_of(int node_idx) const {
    const Node& n = nodes[node_idx];
    if (n.first < 0 || n.last < 0) return "";
    auto offset = [&](const Token& t) {
        return line_spans[t.line - 1].first + static_cast<size_t>(t.column);
    };
    size_t begin = offset(tokens[n.first]);
    size_t end = offset(tokens[n.last]) + tokens[n.last].lexeme.size();
    std::string s = raw_text.substr(begin, end - begin);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string SourceUnit::line_text(int line) const {
    if (line < 1 || line > line_count()) return "";
    auto [begin, end] = line_spans[line - 1];
    while (end > begin && (raw_text[end - 1] == '\n' || raw_text[end - 1] == '\r'))
        --end;
    return raw_text.substr(begin, end - begin);
}

std::vector<int> SourceUnit::statements_of(int block_idx) const {
    std::vector<int> out;
    for (int k : nodes[block_idx].kids)
        if (nodes[k].kind != NodeKind::CommentNode) out.push_back(k);
    return out;
}

SourceUnit parse_source(std::string text) {
    SourceUnit unit;
    unit.raw_text = std::move(text);
    unit.tokens = tokenize(unit.raw_text);

    // Byte span of every physical line, terminator included.
    size_t start = 0;
    for (size_t i = 0; i < unit.raw_text.size(); ++i) {
        char c = unit.raw_text[i];
        if (c == '\n' || (c == '\r' && (i + 1 >= unit.raw_text.size() ||
                                        unit.raw_text[i + 1] != '\n'))) {
            unit.line_spans.emplace_back(start, i + 1);
            start = i + 1;
        }
    }
    if (start < unit.raw_text.size() || unit.line_spans.empty())
        unit.line_spans.emplace_back(start, unit.raw_text.size());

    unit.root = detail::run_parser(unit.tokens, unit.nodes);

    // Focal function: first top-level definition, else first anywhere.
    for (int k : unit.nodes[unit.root].kids) {
        if (unit.nodes[k].kind == NodeKind::FuncDef) {
            unit.focal_func = k;
            break;
        }
    }
    if (unit.focal_func < 0) {
        for (int i = 0; i < static_cast<int>(unit.nodes.size()); ++i) {
            if (unit.nodes[i].kind == NodeKind::FuncDef) {
                unit.focal_func = i;
                break;
            }
        }
    }
    if (unit.focal_func < 0)
        throw NoFunctionError("source contains no function definition");

    for (int k : unit.nodes[unit.root].kids) {
        if ((unit.nodes[k].kind == NodeKind::FuncDef ||
             unit.nodes[k].kind == NodeKind::ClassDef) &&
            unit.nodes[k].head >= 0)
            unit.top_level_def_names.push_back(unit.tokens[unit.nodes[k].head].lexeme);
    }

    // Docstring flags: the leading string-literal statement of each function.
    for (Node& n : unit.nodes) {
        if (n.kind != NodeKind::FuncDef) continue;
        int body = n.kids.empty() ? -1 : n.kids.back();
        if (body < 0 || unit.nodes[body].kind != NodeKind::Block) continue;
        for (int s : unit.nodes[body].kids) {
            if (unit.nodes[s].kind == NodeKind::CommentNode) continue;
            if (unit.nodes[s].kind == NodeKind::ExprStmt &&
                unit.nodes[s].kids.size() == 1 &&
                unit.nodes[unit.nodes[s].kids[0]].kind == NodeKind::StringLit)
                unit.nodes[s].flags |= kFlagDocstring;
            break;
        }
    }

    // Logical lines: maximal runs of code tokens closed by a Newline token.
    int run_start = -1;
    for (int i = 0; i < static_cast<int>(unit.tokens.size()); ++i) {
        const Token& t = unit.tokens[i];
        if (is_code_token(t.kind)) {
            if (run_start < 0) run_start = i;
        } else if (t.kind == TokenKind::Newline || t.kind == TokenKind::EndMarker) {
            if (run_start >= 0) {
                LogicalLine ll;
                ll.first_line = unit.tokens[run_start].line;
                ll.last_line = std::max(t.line, ll.first_line);
                // Deepest statement node containing the run start.
                int node = -1, cursor = unit.root;
                while (cursor >= 0) {
                    if (is_statement_kind(unit.nodes[cursor].kind)) node = cursor;
                    int next = -1;
                    for (int k : unit.nodes[cursor].kids) {
                        if (unit.nodes[k].first <= run_start &&
                            run_start <= unit.nodes[k].last) {
                            next = k;
                            break;
                        }
                    }
                    cursor = next;
                }
                ll.node = node;
                int id = static_cast<int>(unit.logical_lines.size());
                for (int line = ll.first_line; line <= ll.last_line; ++line)
                    unit.line_to_logical.emplace(line, id);
                unit.logical_lines.push_back(ll);
                run_start = -1;
            }
        }
    }

    // Comment classification and tree attachment.
    for (int i = 0; i < static_cast<int>(unit.tokens.size()); ++i) {
        const Token& t = unit.tokens[i];
        if (t.kind != TokenKind::Comment) continue;
        CommentInfo info;
        info.line = t.line;
        info.token_index = i;
        info.text = t.lexeme;
        std::string body = t.lexeme.substr(1);
        if (!body.empty() && body.front() == ' ') body.erase(0, 1);
        info.body = body;

        bool code_before = false;
        for (int j = i - 1; j >= 0; --j) {
            const Token& p = unit.tokens[j];
            if (p.line != t.line) break;
            if (is_code_token(p.kind)) {
                code_before = true;
                break;
            }
        }
        std::string lower = lowercase(body);
        info.todo = lower.rfind("todo", 0) == 0 || lower.rfind("fixme", 0) == 0;
        if (!info.todo && body_parses_as_code(body))
            info.category = CommentCategory::CommentedOutCode;
        else
            info.category = code_before ? CommentCategory::InlineTrailing
                                        : CommentCategory::Interline;

        // Useless comments restate the adjacent statement.
        int adjacent_line = code_before ? t.line : t.line + 1;
        auto it = unit.line_to_logical.find(adjacent_line);
        if (it != unit.line_to_logical.end()) {
            const LogicalLine& ll = unit.logical_lines[it->second];
            std::string stmt_text;
            for (int line = ll.first_line; line <= ll.last_line; ++line)
                stmt_text += unit.line_text(line);
            // Strip the comment itself from the statement text when trailing.
            std::string norm_stmt = squeeze_alnum(stmt_text);
            std::string norm_comment = squeeze_alnum(body);
            if (code_before) {
                std::string without = stmt_text;
                size_t pos = without.find('#');
                if (pos != std::string::npos) without.resize(pos);
                norm_stmt = squeeze_alnum(without);
            }
            info.useless = !norm_comment.empty() && norm_comment == norm_stmt;
        }

        // Attach a CommentNode to the deepest node whose span contains it.
        int attach = unit.root, cursor = unit.root;
        while (true) {
            int next = -1;
            for (int k : unit.nodes[cursor].kids) {
                if (unit.nodes[k].kind == NodeKind::CommentNode) continue;
                if (unit.nodes[k].first <= i && i <= unit.nodes[k].last) {
                    next = k;
                    break;
                }
            }
            if (next < 0) break;
            cursor = next;
            attach = next;
        }
        Node cn{NodeKind::CommentNode};
        cn.first = cn.last = i;
        unit.nodes.push_back(cn);
        info.node = static_cast<int>(unit.nodes.size()) - 1;
        auto& kids = unit.nodes[attach].kids;
        auto pos = std::upper_bound(kids.begin(), kids.end(), i,
                                    [&](int tok, int kid) {
                                        return tok < unit.nodes[kid].first;
                                    });
        kids.insert(pos, info.node);
        unit.comments.push_back(std::move(info));
    }

    return unit;
}

std::vector<CommentInfo> comment_inventory(const SourceUnit& unit) {
    return unit.comments;
}

const char* comment_category_name(CommentCategory category) {
    switch (category) {
        case CommentCategory::Interline: return "interline";
        case CommentCategory::InlineTrailing: return "inline-trailing";
        case CommentCategory::CommentedOutCode: return "commented-out-code";
        case CommentCategory::Docstring: return "docstring";
    }
    return "?";
}

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::Module: return "module";
        case NodeKind::FuncDef: return "funcdef";
        case NodeKind::ParamList: return "paramlist";
        case NodeKind::Param: return "param";
        case NodeKind::ClassDef: return "classdef";
        case NodeKind::Block: return "block";
        case NodeKind::Decorator: return "decorator";
        case NodeKind::ExprStmt: return "expr-stmt";
        case NodeKind::Assign: return "assign";
        case NodeKind::AugAssign: return "aug-assign";
        case NodeKind::AnnAssign: return "ann-assign";
        case NodeKind::Return: return "return";
        case NodeKind::Raise: return "raise";
        case NodeKind::Pass: return "pass";
        case NodeKind::Break: return "break";
        case NodeKind::Continue: return "continue";
        case NodeKind::If: return "if";
        case NodeKind::For: return "for";
        case NodeKind::While: return "while";
        case NodeKind::Try: return "try";
        case NodeKind::Except: return "except";
        case NodeKind::With: return "with";
        case NodeKind::WithItem: return "with-item";
        case NodeKind::Import: return "import";
        case NodeKind::ImportFrom: return "import-from";
        case NodeKind::Global: return "global";
        case NodeKind::Del: return "del";
        case NodeKind::Assert: return "assert";
        case NodeKind::Opaque: return "opaque";
        case NodeKind::NameExpr: return "name";
        case NodeKind::NumberLit: return "number";
        case NodeKind::StringLit: return "string";
        case NodeKind::ConstLit: return "const";
        case NodeKind::TupleLit: return "tuple";
        case NodeKind::ListLit: return "list";
        case NodeKind::DictLit: return "dict";
        case NodeKind::SetLit: return "set";
        case NodeKind::ListComp: return "list-comp";
        case NodeKind::SetComp: return "set-comp";
        case NodeKind::DictComp: return "dict-comp";
        case NodeKind::GenExp: return "genexp";
        case NodeKind::CompFor: return "comp-for";
        case NodeKind::CompIf: return "comp-if";
        case NodeKind::Call: return "call";
        case NodeKind::KeywordArg: return "kwarg";
        case NodeKind::Attribute: return "attribute";
        case NodeKind::Subscript: return "subscript";
        case NodeKind::Slice: return "slice";
        case NodeKind::Compare: return "compare";
        case NodeKind::BoolOp: return "boolop";
        case NodeKind::UnaryOp: return "unaryop";
        case NodeKind::BinOp: return "binop";
        case NodeKind::IfExp: return "ifexp";
        case NodeKind::Lambda: return "lambda";
        case NodeKind::Star: return "star";
        case NodeKind::DoubleStar: return "double-star";
        case NodeKind::Yield: return "yield";
        case NodeKind::Await: return "await";
        case NodeKind::KeyValue: return "key-value";
        case NodeKind::CommentNode: return "comment";
    }
    return "?";
}

}  // namespace stylediff
