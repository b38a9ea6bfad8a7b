#include "stylediff/detectors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

#include "stylediff/align.hpp"
#include "stylediff/analysis.hpp"
#include "stylediff/canonical.hpp"
#include "stylediff/errors.hpp"
#include "stylediff/quality.hpp"

namespace stylediff {

namespace {

constexpr size_t kSnippetMax = 96;

std::string clip_utf8(const std::string& s, size_t limit) {
    if (s.size() <= limit) return s;
    size_t end = limit;
    while (end > 0 && (static_cast<unsigned char>(s[end]) & 0xC0) == 0x80) --end;
    return s.substr(0, end);
}

LineSpan span_of(const SourceUnit& u, int node) {
    const Node& n = u.nodes[node];
    if (n.first < 0) return {0, 0};
    return {u.tokens[n.first].line, u.tokens[n.last].line};
}

std::string snippet_of(const SourceUnit& u, int node) {
    return clip_utf8(u.text_of(node), kSnippetMax);
}

std::string snippet_line(const SourceUnit& u, int line) {
    std::string text = u.line_text(line);
    size_t b = text.find_first_not_of(" \t");
    if (b == std::string::npos) b = 0;
    return clip_utf8(text.substr(b), kSnippetMax);
}

LineSpan focal_span(const SourceUnit& u) {
    if (u.focal_func < 0) return {1, 1};
    return span_of(u, u.focal_func);
}

std::string focal_header_snippet(const SourceUnit& u) {
    if (u.focal_func < 0) return "";
    return snippet_line(u, u.tokens[u.nodes[u.focal_func].first].line);
}

struct Ctx {
    const CodePair& pair;
    const DetectorConfig& config;
    std::vector<StmtEntry> ref_seq;
    std::vector<StmtEntry> cand_seq;
    std::vector<std::pair<int, int>> aligned;
    std::vector<NamePair> names;

    explicit Ctx(const CodePair& p, const DetectorConfig& c) : pair(p), config(c) {
        ref_seq = flatten_focal(p.reference);
        cand_seq = flatten_focal(p.candidate);
        aligned = align_statements(ref_seq, cand_seq);
        names = align_identifiers(p.reference, p.candidate, ref_seq, cand_seq, aligned);
    }

    const SourceUnit& ref() const { return pair.reference; }
    const SourceUnit& cand() const { return pair.candidate; }

    Finding finding(int type_id, LineSpan ref_span, LineSpan cand_span,
                    std::string ref_snip, std::string cand_snip,
                    std::string rule_note) const {
        Finding f;
        f.type_id = type_id;
        f.dimension = dimension_of(type_id);
        f.scope = scope_of(type_id);
        f.ref_span = ref_span;
        f.cand_span = cand_span;
        f.ref_snippet = std::move(ref_snip);
        f.cand_snippet = std::move(cand_snip);
        f.evidence = clip_utf8(f.ref_snippet + " | " + f.cand_snippet, 200);
        for (char& c : f.evidence)
            if (c == '\n' || c == '\r' || c == '\t') c = ' ';
        f.rule_note = std::move(rule_note);
        return f;
    }

    Finding node_finding(int type_id, int ref_node, int cand_node,
                         std::string rule_note) const {
        return finding(type_id, span_of(ref(), ref_node), span_of(cand(), cand_node),
                       snippet_of(ref(), ref_node), snippet_of(cand(), cand_node),
                       std::move(rule_note));
    }

    Finding unit_finding(int type_id, std::string ref_snip, std::string cand_snip,
                         std::string rule_note) const {
        return finding(type_id, focal_span(ref()), focal_span(cand()),
                       std::move(ref_snip), std::move(cand_snip),
                       std::move(rule_note));
    }
};

// ==================================================== formatting (1..6) ====

bool is_generic_name(const std::string& name, const DetectorConfig& cfg) {
    if (name.size() == 1) return true;
    std::string norm = normalized_words(name);
    for (const std::string& g : cfg.generic_identifiers)
        if (norm == g) return true;
    return false;
}

bool is_descriptive_name(const std::string& name, const DetectorConfig& cfg) {
    if (is_generic_name(name, cfg)) return false;
    if (name.size() < 3) return false;
    auto words = split_identifier_words(name);
    if (words.empty()) return false;
    for (const std::string& w : words)
        for (unsigned char c : w)
            if (!std::isalpha(c)) return false;
    return true;
}

void naming_format(const Ctx& ctx, std::vector<Finding>& out) {
    for (const NamePair& p : ctx.names) {
        if (p.ref_name == p.cand_name) continue;
        NameConvention rc = name_convention(p.ref_name);
        NameConvention cc = name_convention(p.cand_name);
        if (rc == cc) continue;
        if (split_identifier_words(p.ref_name) != split_identifier_words(p.cand_name))
            continue;
        LineSpan rs{ctx.ref().tokens[p.ref_token].line,
                    ctx.ref().tokens[p.ref_token].line};
        LineSpan cs{ctx.cand().tokens[p.cand_token].line,
                    ctx.cand().tokens[p.cand_token].line};
        out.push_back(ctx.finding(1, rs, cs, p.ref_name, p.cand_name,
                                  std::string("case-convention:") + p.role));
    }
}

bool is_spacing_op(const Token& t) {
    if (t.kind != TokenKind::Op) return false;
    const std::string& l = t.lexeme;
    if (l == "(" || l == ")" || l == "[" || l == "]" || l == "{" || l == "}")
        return true;
    if (l == "," || l == ":" || l == ";") return true;
    if (l == "." ) return false;
    return true;  // operators
}

std::vector<int> code_tokens_of(const SourceUnit& u, int node) {
    std::vector<int> out;
    const Node& n = u.nodes[node];
    for (int i = n.first; i <= n.last; ++i) {
        switch (u.tokens[i].kind) {
            case TokenKind::Name:
            case TokenKind::Keyword:
            case TokenKind::Number:
            case TokenKind::String:
            case TokenKind::Op:
                out.push_back(i);
                break;
            default:
                break;
        }
    }
    return out;
}

// For simple statements and compound headers, the tokens of the statement's
// first logical line only (so nested blocks are not included).
std::vector<int> header_tokens_of(const SourceUnit& u, int node) {
    std::vector<int> all = code_tokens_of(u, node);
    auto it = u.line_to_logical.find(u.tokens[u.nodes[node].first].line);
    if (it == u.line_to_logical.end()) return all;
    int last_line = u.logical_lines[it->second].last_line;
    std::vector<int> out;
    for (int i : all)
        if (u.tokens[i].line <= last_line) out.push_back(i);
    return out;
}

bool has_space_before(const SourceUnit& u, int tok) {
    return !u.tokens[tok].trivia.empty();
}
bool has_space_after(const SourceUnit& u, int tok) {
    if (tok + 1 >= static_cast<int>(u.tokens.size())) return false;
    return !u.tokens[tok + 1].trivia.empty();
}

void spacing(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    for (auto [ri, ci] : ctx.aligned) {
        int rn = ctx.ref_seq[ri].node;
        int cn = ctx.cand_seq[ci].node;
        std::vector<int> rt = header_tokens_of(R, rn);
        std::vector<int> ct = header_tokens_of(C, cn);
        // Token-level LCS over (kind, lexeme).
        size_t n = rt.size(), m = ct.size();
        if (n == 0 || m == 0) continue;
        auto eq = [&](size_t i, size_t j) {
            const Token& a = R.tokens[rt[i]];
            const Token& b = C.tokens[ct[j]];
            return a.kind == b.kind && a.lexeme == b.lexeme;
        };
        std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
        for (size_t i = n; i-- > 0;)
            for (size_t j = m; j-- > 0;)
                dp[i][j] = eq(i, j) ? dp[i + 1][j + 1] + 1
                                    : std::max(dp[i + 1][j], dp[i][j + 1]);
        std::vector<std::pair<size_t, size_t>> matched;
        for (size_t i = 0, j = 0; i < n && j < m;) {
            if (eq(i, j) && dp[i][j] == dp[i + 1][j + 1] + 1) {
                matched.emplace_back(i, j);
                ++i, ++j;
            } else if (dp[i + 1][j] >= dp[i][j + 1]) {
                ++i;
            } else {
                ++j;
            }
        }
        bool fired = false;
        for (size_t k = 0; k < matched.size() && !fired; ++k) {
            auto [i, j] = matched[k];
            if (!is_spacing_op(R.tokens[rt[i]])) continue;
            // Anchor: immediate neighbours must be matched to each other.
            bool prev_ok = (i == 0 && j == 0) ||
                           (k > 0 && matched[k - 1].first == i - 1 &&
                            matched[k - 1].second == j - 1);
            bool next_ok = (i + 1 == n && j + 1 == m) ||
                           (k + 1 < matched.size() && matched[k + 1].first == i + 1 &&
                            matched[k + 1].second == j + 1);
            if (!prev_ok || !next_ok) continue;
            bool before_differs = i > 0 && j > 0 &&
                                  has_space_before(R, rt[i]) !=
                                      has_space_before(C, ct[j]);
            bool after_differs = i + 1 < n && j + 1 < m &&
                                 has_space_after(R, rt[i]) !=
                                     has_space_after(C, ct[j]);
            if (before_differs || after_differs) {
                out.push_back(ctx.node_finding(
                    2, rn, cn, std::string("token-spacing:'") +
                                   R.tokens[rt[i]].lexeme + "'"));
                fired = true;
            }
        }
        if (fired) continue;
        // Spaces before trailing comments.
        auto trailing_gap = [](const SourceUnit& u, int node) -> int {
            const Node& s = u.nodes[node];
            int line = u.tokens[s.first].line;
            for (int i = s.first; i < static_cast<int>(u.tokens.size()); ++i) {
                const Token& t = u.tokens[i];
                if (t.line != line) break;
                if (t.kind == TokenKind::Comment)
                    return static_cast<int>(t.trivia.size());
            }
            return -1;
        };
        int rg = trailing_gap(R, rn), cg = trailing_gap(C, cn);
        if (rg >= 0 && cg >= 0 && rg != cg)
            out.push_back(ctx.node_finding(2, rn, cn, "trailing-comment-gap"));
    }

    // Indentation unit of the focal body.
    auto indent_info = [](const SourceUnit& u) -> std::pair<int, bool> {
        int body = focal_body(u);
        if (body < 0) return {-1, false};
        std::vector<int> stmts = u.statements_of(body);
        if (stmts.empty()) return {-1, false};
        int line = u.tokens[u.nodes[stmts[0]].first].line;
        std::string text = u.line_text(line);
        int width = 0;
        bool tabs = false;
        for (char c : text) {
            if (c == ' ')
                ++width;
            else if (c == '\t') {
                width = (width / 8 + 1) * 8;
                tabs = true;
            } else {
                break;
            }
        }
        return {width, tabs};
    };
    auto [rw, rtab] = indent_info(R);
    auto [cw, ctab] = indent_info(C);
    if (rw > 0 && cw > 0 && (rw != cw || rtab != ctab)) {
        out.push_back(ctx.unit_finding(2, focal_header_snippet(R),
                                       focal_header_snippet(C), "indent-unit"));
    }
}

int blank_lines_between(const SourceUnit& u, int end_line, int start_line) {
    int count = 0;
    for (int line = end_line + 1; line < start_line; ++line) {
        std::string text = u.line_text(line);
        if (text.find_first_not_of(" \t") == std::string::npos) ++count;
    }
    return count;
}

void blank_lines(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    int rbody = focal_body(R), cbody = focal_body(C);
    if (rbody < 0 || cbody < 0) return;
    // node -> aligned node, restricted to top-level statements.
    std::map<int, int> match;
    for (auto [ri, ci] : ctx.aligned) {
        if (ctx.ref_seq[ri].parent == rbody && ctx.cand_seq[ci].parent == cbody)
            match[ctx.ref_seq[ri].node] = ctx.cand_seq[ci].node;
    }
    std::vector<int> rstmts = R.statements_of(rbody);
    std::vector<int> cstmts = C.statements_of(cbody);
    std::map<int, int> cpos;
    for (size_t i = 0; i < cstmts.size(); ++i) cpos[cstmts[i]] = static_cast<int>(i);
    for (size_t i = 0; i + 1 < rstmts.size(); ++i) {
        int a = rstmts[i], b = rstmts[i + 1];
        auto ma = match.find(a);
        auto mb = match.find(b);
        if (ma == match.end() || mb == match.end()) continue;
        auto pa = cpos.find(ma->second);
        auto pb = cpos.find(mb->second);
        if (pa == cpos.end() || pb == cpos.end()) continue;
        if (pb->second != pa->second + 1) continue;  // must be adjacent on both sides
        int r_gap = blank_lines_between(R, span_of(R, a).end_line,
                                        span_of(R, b).start_line);
        int c_gap = blank_lines_between(C, span_of(C, ma->second).end_line,
                                        span_of(C, mb->second).start_line);
        if (r_gap != c_gap) {
            out.push_back(ctx.node_finding(
                3, b, mb->second,
                "blank-separators:" + std::to_string(r_gap) + "-vs-" +
                    std::to_string(c_gap)));
        }
    }
}

void inline_usage(const Ctx& ctx, std::vector<Finding>& out) {
    auto one_direction = [&](const SourceUnit& X, const SourceUnit& Y, bool x_is_ref) {
        std::vector<Intermediate> inters = single_use_intermediates(X);
        if (inters.empty()) return;
        // Candidate statements on Y to search: simple statements plus
        // conditions/iterables of compounds.
        struct Hay {
            int node;
            std::string sig;
        };
        std::vector<Hay> hays;
        for (const StmtEntry& e : flatten_focal(Y)) {
            const Node& n = Y.nodes[e.node];
            switch (n.kind) {
                case NodeKind::Assign:
                case NodeKind::AugAssign:
                case NodeKind::Return:
                case NodeKind::Raise:
                case NodeKind::ExprStmt:
                    hays.push_back({e.node, lexeme_signature(Y, e.node)});
                    break;
                case NodeKind::If:
                case NodeKind::While:
                    if (!n.kids.empty())
                        hays.push_back({e.node, lexeme_signature(Y, n.kids[0])});
                    break;
                case NodeKind::For:
                    if (n.kids.size() > 1)
                        hays.push_back({e.node, lexeme_signature(Y, n.kids[1])});
                    break;
                default:
                    break;
            }
        }
        for (const Intermediate& im : inters) {
            std::vector<int> rhs_toks = code_tokens_of(X, im.rhs_node);
            if (static_cast<int>(rhs_toks.size()) < ctx.config.inline_min_tokens)
                continue;
            std::string needle = " " + lexeme_signature(X, im.rhs_node) + " ";
            std::string assign_sig = " " + lexeme_signature(X, im.assign_node) + " ";
            for (const Hay& hay : hays) {
                std::string padded = " " + hay.sig + " ";
                if (padded.find(needle) == std::string::npos) continue;
                if (padded == assign_sig) continue;
                // Skip when Y's statement is an equivalent assignment.
                if (Y.nodes[hay.node].kind == NodeKind::Assign) {
                    const Node& ya = Y.nodes[hay.node];
                    if (ya.kids.size() == 2) {
                        std::string y_rhs =
                            " " + lexeme_signature(Y, ya.kids[1]) + " ";
                        if (y_rhs == needle) continue;
                    }
                }
                if (x_is_ref)
                    out.push_back(ctx.node_finding(4, im.assign_node, hay.node,
                                                   "intermediate:" + im.name));
                else
                    out.push_back(ctx.node_finding(4, hay.node, im.assign_node,
                                                   "intermediate:" + im.name));
                break;
            }
        }
    };
    one_direction(ctx.ref(), ctx.cand(), true);
    one_direction(ctx.cand(), ctx.ref(), false);
}

void comment_format(const Ctx& ctx, std::vector<Finding>& out) {
    auto categories = [](const SourceUnit& u) {
        std::set<CommentCategory> cats;
        for (const CommentInfo& c : u.comments) cats.insert(c.category);
        return cats;
    };
    std::set<CommentCategory> rc = categories(ctx.ref());
    std::set<CommentCategory> cc = categories(ctx.cand());
    if (rc == cc) return;
    std::string note = "comment-categories:";
    auto describe = [&](const std::set<CommentCategory>& have,
                        const std::set<CommentCategory>& other, const char* side) {
        for (CommentCategory c : have)
            if (!other.count(c))
                note += std::string(side) + comment_category_name(c) + ";";
    };
    describe(rc, cc, "ref-only:");
    describe(cc, rc, "cand-only:");
    auto exemplar = [](const SourceUnit& u, const std::set<CommentCategory>& only,
                       const std::set<CommentCategory>& other) -> std::string {
        for (const CommentInfo& c : u.comments)
            if (!other.count(c.category)) return clip_utf8(c.text, kSnippetMax);
        return "";
    };
    std::string rsnip = exemplar(ctx.ref(), rc, cc);
    std::string csnip = exemplar(ctx.cand(), cc, rc);
    if (rsnip.empty()) rsnip = focal_header_snippet(ctx.ref());
    if (csnip.empty()) csnip = focal_header_snippet(ctx.cand());
    out.push_back(ctx.unit_finding(5, rsnip, csnip, note));
}

int physical_spread(const SourceUnit& u, int node) {
    auto it = u.line_to_logical.find(u.tokens[u.nodes[node].first].line);
    if (it == u.line_to_logical.end()) return 1;
    const LogicalLine& ll = u.logical_lines[it->second];
    return ll.last_line - ll.first_line + 1;
}

void statement_organization(const Ctx& ctx, std::vector<Finding>& out) {
    for (auto [ri, ci] : ctx.aligned) {
        int rn = ctx.ref_seq[ri].node;
        int cn = ctx.cand_seq[ci].node;
        int rs = physical_spread(ctx.ref(), rn);
        int cs = physical_spread(ctx.cand(), cn);
        if ((rs == 1 && cs > 1) || (rs > 1 && cs == 1)) {
            out.push_back(ctx.node_finding(
                6, rn, cn,
                "lines:" + std::to_string(rs) + "-vs-" + std::to_string(cs)));
        }
    }
}

// ====================================================== semantic (7..8) ====

void naming_semantics(const Ctx& ctx, std::vector<Finding>& out) {
    for (const NamePair& p : ctx.names) {
        if (p.ref_name == p.cand_name) continue;
        bool rg = is_generic_name(p.ref_name, ctx.config);
        bool cg = is_generic_name(p.cand_name, ctx.config);
        bool rd = is_descriptive_name(p.ref_name, ctx.config);
        bool cd = is_descriptive_name(p.cand_name, ctx.config);
        if ((rg && cd) || (cg && rd)) {
            LineSpan rs{ctx.ref().tokens[p.ref_token].line,
                        ctx.ref().tokens[p.ref_token].line};
            LineSpan cs{ctx.cand().tokens[p.cand_token].line,
                        ctx.cand().tokens[p.cand_token].line};
            out.push_back(ctx.finding(7, rs, cs, p.ref_name, p.cand_name,
                                      std::string("generic-vs-descriptive:") +
                                          p.role));
        }
    }
}

int comment_word_count(const CommentInfo& c) {
    std::istringstream in(c.body);
    int n = 0;
    std::string w;
    while (in >> w) ++n;
    return n;
}

int bucket_of(int words, const DetectorConfig& cfg) {
    if (words <= cfg.comment_terse_max) return 0;
    if (words <= cfg.comment_normal_max) return 1;
    return 2;
}

void comment_semantics(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();

    auto todo_comment = [](const SourceUnit& u) -> const CommentInfo* {
        for (const CommentInfo& c : u.comments)
            if (c.todo) return &c;
        return nullptr;
    };
    const CommentInfo* rtodo = todo_comment(R);
    const CommentInfo* ctodo = todo_comment(C);
    if ((rtodo == nullptr) != (ctodo == nullptr)) {
        std::string rsnip = rtodo ? clip_utf8(rtodo->text, kSnippetMax)
                                  : focal_header_snippet(R);
        std::string csnip = ctodo ? clip_utf8(ctodo->text, kSnippetMax)
                                  : focal_header_snippet(C);
        out.push_back(ctx.unit_finding(8, rsnip, csnip, "one-sided-todo"));
    }

    auto useless_comment = [](const SourceUnit& u) -> const CommentInfo* {
        for (const CommentInfo& c : u.comments)
            if (c.useless) return &c;
        return nullptr;
    };
    const CommentInfo* ru = useless_comment(R);
    const CommentInfo* cu = useless_comment(C);
    if ((ru == nullptr) != (cu == nullptr)) {
        std::string rsnip = ru ? clip_utf8(ru->text, kSnippetMax)
                               : focal_header_snippet(R);
        std::string csnip = cu ? clip_utf8(cu->text, kSnippetMax)
                               : focal_header_snippet(C);
        out.push_back(ctx.unit_finding(8, rsnip, csnip, "useless-comment"));
    }

    // Detail buckets on comments attached to aligned statements.
    auto comment_for_node = [](const SourceUnit& u,
                               int node) -> const CommentInfo* {
        for (const CommentInfo& c : u.comments) {
            int adjacent = c.category == CommentCategory::InlineTrailing
                               ? c.line
                               : c.line + 1;
            auto it = u.line_to_logical.find(adjacent);
            if (it == u.line_to_logical.end()) continue;
            if (u.logical_lines[it->second].node == node) return &c;
        }
        return nullptr;
    };
    for (auto [ri, ci] : ctx.aligned) {
        int rn = ctx.ref_seq[ri].node;
        int cn = ctx.cand_seq[ci].node;
        const CommentInfo* rcom = comment_for_node(R, rn);
        const CommentInfo* ccom = comment_for_node(C, cn);
        if (!rcom || !ccom) continue;
        int rb = bucket_of(comment_word_count(*rcom), ctx.config);
        int cb = bucket_of(comment_word_count(*ccom), ctx.config);
        if (rb != cb) {
            out.push_back(ctx.finding(8, {rcom->line, rcom->line},
                                      {ccom->line, ccom->line},
                                      clip_utf8(rcom->text, kSnippetMax),
                                      clip_utf8(ccom->text, kSnippetMax),
                                      "detail-bucket"));
        }
    }
}

// ================================================== expression (9..15) ====

enum class AssignStyle { Standard, Augmented, Chained, TupleUnpack };

const char* assign_style_name(AssignStyle s) {
    switch (s) {
        case AssignStyle::Standard: return "standard";
        case AssignStyle::Augmented: return "augmented";
        case AssignStyle::Chained: return "chained";
        case AssignStyle::TupleUnpack: return "tuple-unpacking";
    }
    return "?";
}

AssignStyle assign_style(const SourceUnit& u, int node) {
    const Node& n = u.nodes[node];
    if (n.kind == NodeKind::AugAssign) return AssignStyle::Augmented;
    if (n.kind == NodeKind::Assign && n.kids.size() > 2) return AssignStyle::Chained;
    if (!n.kids.empty() && u.nodes[n.kids[0]].kind == NodeKind::TupleLit)
        return AssignStyle::TupleUnpack;
    return AssignStyle::Standard;
}

std::set<std::string> target_words(const SourceUnit& u, int node) {
    std::set<std::string> out;
    const Node& n = u.nodes[node];
    size_t targets = n.kind == NodeKind::Assign && n.kids.size() > 1
                         ? n.kids.size() - 1
                         : 1;
    for (size_t i = 0; i < targets && i < n.kids.size(); ++i)
        for (const std::string& nm : names_in(u, n.kids[i]))
            out.insert(normalized_words(nm));
    return out;
}

void assignment_styles(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    for (auto [ri, ci] : ctx.aligned) {
        if (ctx.ref_seq[ri].cls != StmtClass::Assignment) continue;
        int rn = ctx.ref_seq[ri].node;
        int cn = ctx.cand_seq[ci].node;
        if (R.nodes[rn].kind == NodeKind::AnnAssign ||
            C.nodes[cn].kind == NodeKind::AnnAssign)
            continue;  // annotation presence is not an assignment-style class
        AssignStyle rs = assign_style(R, rn);
        AssignStyle cs = assign_style(C, cn);
        if (rs == cs) continue;
        std::set<std::string> rw = target_words(R, rn);
        std::set<std::string> cw = target_words(C, cn);
        bool overlap = false;
        for (const std::string& w : rw) overlap |= cw.count(w) > 0;
        if (!overlap) continue;
        out.push_back(ctx.node_finding(9, rn, cn,
                                       std::string(assign_style_name(rs)) + "-vs-" +
                                           assign_style_name(cs)));
    }

    // Tuple unpacking on one side vs separate assignments on the other.
    auto tuple_vs_separate = [&](const SourceUnit& X, const SourceUnit& Y,
                                 bool x_is_ref) {
        int xbody = focal_body(X), ybody = focal_body(Y);
        if (xbody < 0 || ybody < 0) return;
        for (int a : descendants_of_kind(X, xbody, NodeKind::Assign)) {
            const Node& n = X.nodes[a];
            if (n.kids.size() != 2 ||
                X.nodes[n.kids[0]].kind != NodeKind::TupleLit)
                continue;
            std::set<std::string> targets;
            for (const std::string& nm : names_in(X, n.kids[0]))
                targets.insert(normalized_words(nm));
            if (targets.size() < 2) continue;
            std::set<std::string> covered;
            int y_node = -1;
            for (int ya : descendants_of_kind(Y, ybody, NodeKind::Assign)) {
                const Node& yn = Y.nodes[ya];
                if (yn.kids.size() != 2 ||
                    Y.nodes[yn.kids[0]].kind != NodeKind::NameExpr)
                    continue;
                std::string w = normalized_words(
                    Y.tokens[Y.nodes[yn.kids[0]].head].lexeme);
                if (targets.count(w)) {
                    covered.insert(w);
                    if (y_node < 0) y_node = ya;
                }
            }
            if (covered == targets && !Y.nodes.empty() && y_node >= 0) {
                if (x_is_ref)
                    out.push_back(
                        ctx.node_finding(9, a, y_node, "tuple-vs-separate"));
                else
                    out.push_back(
                        ctx.node_finding(9, y_node, a, "tuple-vs-separate"));
            }
        }
    };
    tuple_vs_separate(R, C, true);
    tuple_vs_separate(C, R, false);
}

void conditional_syntax(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    std::vector<int> r_ifexp = descendants_of_kind(R, R.focal_func, NodeKind::IfExp);
    std::vector<int> c_ifexp = descendants_of_kind(C, C.focal_func, NodeKind::IfExp);
    std::vector<int> r_if = descendants_of_kind(R, R.focal_func, NodeKind::If);
    std::vector<int> c_if = descendants_of_kind(C, C.focal_func, NodeKind::If);
    if (!r_ifexp.empty() && c_ifexp.empty() && !c_if.empty()) {
        out.push_back(ctx.node_finding(10, r_ifexp[0], c_if[0],
                                       "expression-vs-statement"));
    } else if (!c_ifexp.empty() && r_ifexp.empty() && !r_if.empty()) {
        out.push_back(ctx.node_finding(10, r_if[0], c_ifexp[0],
                                       "statement-vs-expression"));
    }
}

// Smallest integer satisfying the comparison, for > and >=; largest for < / <=.
std::pair<char, long long> comparison_bound(const ComparisonFact& f) {
    if (f.op == ">") return {'>', f.literal + 1};
    if (f.op == ">=") return {'>', f.literal};
    if (f.op == "<") return {'<', f.literal - 1};
    return {'<', f.literal};
}

void conditional_expression(const Ctx& ctx, std::vector<Finding>& out) {
    std::vector<ComparisonFact> rf = integer_comparisons(ctx.ref());
    std::vector<ComparisonFact> cf = integer_comparisons(ctx.cand());
    std::set<std::string> fired;
    for (const ComparisonFact& a : rf) {
        for (const ComparisonFact& b : cf) {
            if (a.left_signature != b.left_signature) continue;
            if (a.op == b.op && a.literal == b.literal) continue;
            if (comparison_bound(a) != comparison_bound(b)) continue;
            if (!fired.insert(a.left_signature).second) continue;
            out.push_back(ctx.node_finding(11, a.node, b.node,
                                           "equivalent-bounds:" + a.op +
                                               std::to_string(a.literal) + "-vs-" +
                                               b.op + std::to_string(b.literal)));
        }
    }
}

void data_structure_construction(const Ctx& ctx, std::vector<Finding>& out) {
    std::map<std::string, std::map<BuildClass, int>> ref_roles, cand_roles;
    for (const CollectionBuild& b : collection_builds(ctx.ref()))
        ref_roles[b.role][b.cls] = b.node;
    for (const CollectionBuild& b : collection_builds(ctx.cand()))
        cand_roles[b.role][b.cls] = b.node;
    for (const auto& [role, rclasses] : ref_roles) {
        auto it = cand_roles.find(role);
        if (it == cand_roles.end()) continue;
        const auto& cclasses = it->second;
        // Fire when the class sets differ.
        bool same = rclasses.size() == cclasses.size();
        if (same) {
            for (const auto& [cls, node] : rclasses)
                if (!cclasses.count(cls)) same = false;
        }
        if (same) continue;
        int rn = rclasses.begin()->second;
        int cn = cclasses.begin()->second;
        std::string note = "role:" + role + ":" +
                           build_class_name(rclasses.begin()->first) + "-vs-" +
                           build_class_name(cclasses.begin()->first);
        out.push_back(ctx.node_finding(12, rn, cn, note));
    }
}

struct CallProfile {
    std::vector<CallSite> calls;
    std::vector<ApiSource> sources;
};

CallProfile call_profile(const Ctx& ctx, const SourceUnit& u) {
    CallProfile p;
    if (u.focal_func < 0) return p;
    std::string focal_name =
        u.nodes[u.focal_func].head >= 0
            ? u.tokens[u.nodes[u.focal_func].head].lexeme
            : "";
    for (CallSite& c : collect_calls(u, u.focal_func)) {
        if (!c.is_attribute && is_builtin_exception(c.callee)) continue;
        p.sources.push_back(classify_call(c, ctx.pair.repo_symbols,
                                          u.top_level_def_names, focal_name));
        p.calls.push_back(std::move(c));
    }
    return p;
}

void api_preference(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    CallProfile rp = call_profile(ctx, R);
    CallProfile cp = call_profile(ctx, C);

    // Sub-rule: a repository-defined callable invoked on exactly one side.
    if (!ctx.pair.repo_symbols.empty()) {
        auto repo_callees = [](const CallProfile& p) {
            std::map<std::string, int> out;  // name -> call node
            for (size_t i = 0; i < p.calls.size(); ++i)
                if (p.sources[i] == ApiSource::RepoDefined)
                    out.emplace(p.calls[i].callee, p.calls[i].node);
            return out;
        };
        std::map<std::string, int> r_repo = repo_callees(rp);
        std::map<std::string, int> c_repo = repo_callees(cp);
        for (const auto& [name, node] : r_repo) {
            if (c_repo.count(name)) continue;
            int cn = cp.calls.empty() ? C.focal_func : cp.calls[0].node;
            out.push_back(ctx.node_finding(13, node, cn,
                                           "repo-call-only-in-reference:" + name));
        }
        for (const auto& [name, node] : c_repo) {
            if (r_repo.count(name)) continue;
            int rn = rp.calls.empty() ? R.focal_func : rp.calls[0].node;
            out.push_back(ctx.node_finding(13, rn, node,
                                           "repo-call-only-in-candidate:" + name));
        }
    }

    // Sub-rule: aligned statements whose call-source profiles differ.
    auto sources_in = [](const SourceUnit& u, const CallProfile& p, int stmt) {
        std::multiset<ApiSource> s;
        std::set<std::string> names;
        const Node& n = u.nodes[stmt];
        for (size_t i = 0; i < p.calls.size(); ++i) {
            const Node& call = u.nodes[p.calls[i].node];
            if (call.first >= n.first && call.last <= n.last) {
                s.insert(p.sources[i]);
                names.insert(p.calls[i].callee);
            }
        }
        return std::make_pair(s, names);
    };
    for (auto [ri, ci] : ctx.aligned) {
        int rn = ctx.ref_seq[ri].node;
        int cn = ctx.cand_seq[ci].node;
        auto [rs, rnames] = sources_in(R, rp, rn);
        auto [cs, cnames] = sources_in(C, cp, cn);
        if (rs.empty() || cs.empty()) continue;
        bool differs = rs != cs;
        if (!differs && rs.count(ApiSource::RepoDefined) > 0 && rnames != cnames)
            differs = true;  // different repo functions for the same step
        if (differs) {
            out.push_back(ctx.node_finding(13, rn, cn, "call-source-profile"));
        }
    }

    // Sub-rule: one side reimplements with a bare loop what the other does
    // with a single call.
    auto single_call_stmt = [](const SourceUnit& u, const CallProfile& p) -> int {
        for (const StmtEntry& e : flatten_focal(u)) {
            const Node& n = u.nodes[e.node];
            if (n.kind != NodeKind::Return && n.kind != NodeKind::ExprStmt &&
                n.kind != NodeKind::Assign)
                continue;
            int value = -1;
            if (n.kind == NodeKind::Return && n.kids.size() == 1)
                value = n.kids[0];
            else if (n.kind == NodeKind::ExprStmt && n.kids.size() == 1)
                value = n.kids[0];
            else if (n.kind == NodeKind::Assign && n.kids.size() == 2)
                value = n.kids[1];
            if (value < 0 || u.nodes[value].kind != NodeKind::Call) continue;
            return e.node;
        }
        return -1;
    };
    auto loop_count = [](const SourceUnit& u) {
        int body = focal_body(u);
        if (body < 0) return 0;
        return static_cast<int>(descendants_of_kind(u, body, NodeKind::For).size() +
                                descendants_of_kind(u, body, NodeKind::While).size());
    };
    if (rp.calls.empty() && loop_count(R) > 0 && !cp.calls.empty()) {
        int cs = single_call_stmt(C, cp);
        if (cs >= 0) {
            int rbody = focal_body(R);
            std::vector<int> loops =
                descendants_of_kind(R, rbody, NodeKind::For);
            if (loops.empty()) loops = descendants_of_kind(R, rbody, NodeKind::While);
            out.push_back(
                ctx.node_finding(13, loops[0], cs, "self-implemented-vs-call"));
        }
    } else if (cp.calls.empty() && loop_count(C) > 0 && !rp.calls.empty()) {
        int rs = single_call_stmt(R, rp);
        if (rs >= 0) {
            int cbody = focal_body(C);
            std::vector<int> loops =
                descendants_of_kind(C, cbody, NodeKind::For);
            if (loops.empty()) loops = descendants_of_kind(C, cbody, NodeKind::While);
            out.push_back(
                ctx.node_finding(13, rs, loops[0], "call-vs-self-implemented"));
        }
    }
}

int feature_exemplar(const SourceUnit& u, const std::string& feature) {
    std::vector<NodeKind> kinds;
    if (feature == "lambda") kinds = {NodeKind::Lambda};
    else if (feature == "comprehension")
        kinds = {NodeKind::ListComp, NodeKind::SetComp, NodeKind::DictComp};
    else if (feature == "generator-expression") kinds = {NodeKind::GenExp};
    else if (feature == "conditional-expression") kinds = {NodeKind::IfExp};
    else if (feature == "with-statement") kinds = {NodeKind::With};
    else if (feature == "decorator") kinds = {NodeKind::Decorator};
    else if (feature == "unpacking") {
        for (int s : descendants_of_kind(u, u.focal_func, NodeKind::Star))
            return s;
        for (int a : descendants_of_kind(u, u.focal_func, NodeKind::Assign))
            if (!u.nodes[a].kids.empty() &&
                u.nodes[u.nodes[a].kids[0]].kind == NodeKind::TupleLit)
                return a;
        for (int f : descendants_of_kind(u, u.focal_func, NodeKind::For))
            if (!u.nodes[f].kids.empty() &&
                u.nodes[u.nodes[f].kids[0]].kind == NodeKind::TupleLit)
                return f;
        return u.focal_func;
    }
    for (NodeKind k : kinds) {
        std::vector<int> found = descendants_of_kind(u, u.focal_func, k);
        if (!found.empty()) return found[0];
    }
    return u.focal_func;
}

void advanced_syntax(const Ctx& ctx, std::vector<Finding>& out) {
    FeatureSet rf = advanced_features(ctx.ref());
    FeatureSet cf = advanced_features(ctx.cand());
    auto emit = [&](bool r, bool c, const char* feature) {
        if (r == c) return;
        int rn = r ? feature_exemplar(ctx.ref(), feature) : ctx.ref().focal_func;
        int cn = c ? feature_exemplar(ctx.cand(), feature) : ctx.cand().focal_func;
        std::string rsnip =
            r ? snippet_of(ctx.ref(), rn) : focal_header_snippet(ctx.ref());
        std::string csnip =
            c ? snippet_of(ctx.cand(), cn) : focal_header_snippet(ctx.cand());
        out.push_back(ctx.finding(14, span_of(ctx.ref(), rn),
                                  span_of(ctx.cand(), cn), std::move(rsnip),
                                  std::move(csnip),
                                  std::string("feature:") + feature));
    };
    emit(rf.lambda_expr, cf.lambda_expr, "lambda");
    emit(rf.comprehension, cf.comprehension, "comprehension");
    emit(rf.generator_expr, cf.generator_expr, "generator-expression");
    emit(rf.conditional_expr, cf.conditional_expr, "conditional-expression");
    emit(rf.unpacking, cf.unpacking, "unpacking");
    emit(rf.with_statement, cf.with_statement, "with-statement");
    emit(rf.decorator, cf.decorator, "decorator");
}

void code_ordering(const Ctx& ctx, std::vector<Finding>& out) {
    auto groups = [](const SourceUnit& u) {
        std::vector<std::pair<std::string, int>> seq;  // label, node
        int body = focal_body(u);
        if (body < 0) return seq;
        FaultProfile profile = fault_profile(u);
        std::set<int> validations;
        for (const GuardInfo& g : profile.input_validations) validations.insert(g.node);
        for (const GuardInfo& g : profile.runtime_validations)
            validations.insert(g.node);
        for (int s : u.statements_of(body)) {
            const Node& n = u.nodes[s];
            if (n.flags & kFlagDocstring) continue;
            std::string label;
            switch (n.kind) {
                case NodeKind::Import:
                case NodeKind::ImportFrom: label = "import"; break;
                case NodeKind::For:
                case NodeKind::While: label = "loop"; break;
                case NodeKind::Assign:
                case NodeKind::AugAssign:
                case NodeKind::AnnAssign: label = "assignment"; break;
                case NodeKind::Return: label = "return"; break;
                case NodeKind::If:
                    label = validations.count(s) ? "validation" : "conditional";
                    break;
                default: label = "other"; break;
            }
            if (seq.empty() || seq.back().first != label) seq.emplace_back(label, s);
        }
        return seq;
    };
    auto rseq = groups(ctx.ref());
    auto cseq = groups(ctx.cand());
    auto first_pos = [](const std::vector<std::pair<std::string, int>>& seq,
                        const std::string& label) {
        for (size_t i = 0; i < seq.size(); ++i)
            if (seq[i].first == label) return static_cast<int>(i);
        return -1;
    };
    static const char* labels[] = {"import", "validation", "assignment", "loop",
                                   "conditional"};
    for (size_t a = 0; a < std::size(labels); ++a) {
        for (size_t b = a + 1; b < std::size(labels); ++b) {
            int ra = first_pos(rseq, labels[a]), rb = first_pos(rseq, labels[b]);
            int ca = first_pos(cseq, labels[a]), cb = first_pos(cseq, labels[b]);
            if (ra < 0 || rb < 0 || ca < 0 || cb < 0) continue;
            if ((ra < rb) != (ca < cb)) {
                int rn = rseq[static_cast<size_t>(std::min(ra, rb))].second;
                int cn = cseq[static_cast<size_t>(std::min(ca, cb))].second;
                out.push_back(ctx.node_finding(
                    15, rn, cn,
                    std::string("group-order:") + labels[a] + "/" + labels[b]));
                return;  // one ordering finding per pair
            }
        }
    }
}

// ================================================= control flow (16..18) ====

struct LoopInfo {
    int node;
    bool is_for;
    bool has_else;
    bool if_break;
};

std::vector<LoopInfo> loops_of(const SourceUnit& u,
                               const std::vector<StmtEntry>& seq) {
    std::vector<LoopInfo> out;
    for (const StmtEntry& e : seq) {
        const Node& n = u.nodes[e.node];
        if (n.kind != NodeKind::For && n.kind != NodeKind::While) continue;
        LoopInfo info;
        info.node = e.node;
        info.is_for = n.kind == NodeKind::For;
        info.has_else = (n.flags & kFlagHasElse) != 0;
        info.if_break = false;
        for (int i : descendants_of_kind(u, e.node, NodeKind::If))
            if (contains_kind(u, i, NodeKind::Break)) info.if_break = true;
        out.push_back(info);
    }
    return out;
}

void loop_structure(const Ctx& ctx, std::vector<Finding>& out) {
    std::vector<LoopInfo> rl = loops_of(ctx.ref(), ctx.ref_seq);
    std::vector<LoopInfo> cl = loops_of(ctx.cand(), ctx.cand_seq);
    size_t n = std::min(rl.size(), cl.size());
    for (size_t i = 0; i < n; ++i) {
        if (rl[i].is_for != cl[i].is_for) {
            out.push_back(ctx.node_finding(16, rl[i].node, cl[i].node,
                                           rl[i].is_for ? "for-vs-while"
                                                        : "while-vs-for"));
            continue;
        }
        if (rl[i].has_else != cl[i].has_else) {
            out.push_back(
                ctx.node_finding(16, rl[i].node, cl[i].node, "loop-else"));
        } else if (rl[i].if_break != cl[i].if_break) {
            out.push_back(
                ctx.node_finding(16, rl[i].node, cl[i].node, "if-break"));
        }
    }
}

struct CondShape {
    int nested_plain = 0;   // if whose body is exactly one if, neither has else
    int and_conditions = 0; // if with a top-level `and` in the condition
    int elif_chains = 0;
    int else_if = 0;        // else branch holding exactly one if
    int guard_returns = 0;  // if without else whose body ends in return
    int if_else_returns = 0;  // if/else where both branches end in return
    int first_if = -1;
};

CondShape cond_shape(const SourceUnit& u) {
    CondShape shape;
    if (u.focal_func < 0) return shape;
    for (int i : descendants_of_kind(u, u.focal_func, NodeKind::If)) {
        const Node& n = u.nodes[i];
        if (shape.first_if < 0) shape.first_if = i;
        bool is_elif = (n.flags & kFlagElif) != 0;
        bool has_else_block = false;
        int body = -1, else_block = -1, elif_arm = -1;
        for (int k : n.kids) {
            if (u.nodes[k].kind == NodeKind::Block) {
                if (body < 0)
                    body = k;
                else {
                    else_block = k;
                    has_else_block = true;
                }
            } else if (u.nodes[k].kind == NodeKind::If) {
                elif_arm = k;
            }
        }
        if (elif_arm >= 0 && !is_elif) shape.elif_chains++;
        if (!n.kids.empty() && contains_kind(u, n.kids[0], NodeKind::BoolOp)) {
            // `and` at any level of the condition
            for (int b : descendants_of_kind(u, n.kids[0], NodeKind::BoolOp))
                if (!(u.nodes[b].flags & kFlagBoolOr)) shape.and_conditions++;
        }
        if (body >= 0 && !has_else_block && elif_arm < 0) {
            std::vector<int> stmts = u.statements_of(body);
            if (stmts.size() == 1 && u.nodes[stmts[0]].kind == NodeKind::If) {
                const Node& inner = u.nodes[stmts[0]];
                bool inner_else = false;
                int blocks = 0;
                for (int k : inner.kids)
                    if (u.nodes[k].kind == NodeKind::Block) ++blocks;
                inner_else = blocks > 1;
                for (int k : inner.kids)
                    if (u.nodes[k].kind == NodeKind::If) inner_else = true;
                if (!inner_else) shape.nested_plain++;
            }
            if (!stmts.empty() &&
                u.nodes[stmts.back()].kind == NodeKind::Return)
                shape.guard_returns++;
        }
        if (has_else_block && body >= 0 && else_block >= 0) {
            std::vector<int> b1 = u.statements_of(body);
            std::vector<int> b2 = u.statements_of(else_block);
            if (!b1.empty() && !b2.empty() &&
                u.nodes[b1.back()].kind == NodeKind::Return &&
                u.nodes[b2.back()].kind == NodeKind::Return)
                shape.if_else_returns++;
            if (b2.size() == 1 && u.nodes[b2[0]].kind == NodeKind::If)
                shape.else_if++;
        }
    }
    return shape;
}

void conditional_structure(const Ctx& ctx, std::vector<Finding>& out) {
    CondShape r = cond_shape(ctx.ref());
    CondShape c = cond_shape(ctx.cand());
    if (r.first_if < 0 || c.first_if < 0) return;
    auto emit = [&](const char* note) {
        out.push_back(ctx.node_finding(17, r.first_if, c.first_if, note));
    };
    if ((r.nested_plain > 0 && r.and_conditions == 0 && c.and_conditions > 0 &&
         c.nested_plain == 0) ||
        (c.nested_plain > 0 && c.and_conditions == 0 && r.and_conditions > 0 &&
         r.nested_plain == 0)) {
        emit("nested-vs-combined");
        return;
    }
    if ((r.elif_chains > 0 && r.else_if == 0 && c.else_if > 0 &&
         c.elif_chains == 0) ||
        (c.elif_chains > 0 && c.else_if == 0 && r.else_if > 0 &&
         r.elif_chains == 0)) {
        emit("elif-vs-nested-else");
        return;
    }
    if ((r.guard_returns > 0 && r.if_else_returns == 0 && c.if_else_returns > 0 &&
         c.guard_returns == 0) ||
        (c.guard_returns > 0 && c.if_else_returns == 0 && r.if_else_returns > 0 &&
         r.guard_returns == 0)) {
        emit("guard-return-vs-if-else");
    }
}

void control_flow_structure(const Ctx& ctx, std::vector<Finding>& out) {
    auto one_direction = [&](const SourceUnit& with_try, const SourceUnit& with_if,
                             bool try_is_ref) {
        std::vector<int> tries =
            descendants_of_kind(with_try, with_try.focal_func, NodeKind::Try);
        if (tries.empty()) return;
        if (!descendants_of_kind(with_if, with_if.focal_func, NodeKind::Try)
                 .empty())
            return;
        for (int t : tries) {
            const Node& tn = with_try.nodes[t];
            if (tn.kids.empty()) continue;
            std::set<std::string> try_names = names_in(with_try, tn.kids[0]);
            for (int i :
                 descendants_of_kind(with_if, with_if.focal_func, NodeKind::If)) {
                const Node& in = with_if.nodes[i];
                if (in.kids.empty()) continue;
                std::set<std::string> cond_names = names_in(with_if, in.kids[0]);
                bool overlap = false;
                for (const std::string& nm : cond_names)
                    overlap |= try_names.count(nm) > 0;
                if (!overlap) continue;
                if (try_is_ref)
                    out.push_back(
                        ctx.node_finding(18, t, i, "try-except-vs-conditional"));
                else
                    out.push_back(
                        ctx.node_finding(18, i, t, "conditional-vs-try-except"));
                return;
            }
        }
    };
    one_direction(ctx.ref(), ctx.cand(), true);
    one_direction(ctx.cand(), ctx.ref(), false);
}

// ============================================== fault tolerance (19..24) ====

struct GuardStyle {
    bool raises = false;
    bool sentinel = false;
    bool logs = false;
    std::set<std::string> raised;
};

GuardStyle aggregate(const std::vector<GuardInfo>& guards) {
    GuardStyle s;
    for (const GuardInfo& g : guards) {
        s.raises |= g.raises;
        s.sentinel |= g.returns_sentinel;
        s.logs |= g.logs;
        s.raised.insert(g.raised_classes.begin(), g.raised_classes.end());
    }
    return s;
}

void fault_presence_and_style(const Ctx& ctx, std::vector<Finding>& out) {
    const SourceUnit& R = ctx.ref();
    const SourceUnit& C = ctx.cand();
    FaultProfile rp = fault_profile(R);
    FaultProfile cp = fault_profile(C);

    auto exemplar = [](const SourceUnit& u, const std::vector<GuardInfo>& gs) {
        return gs.empty() ? u.focal_func : gs[0].node;
    };

    // Presence asymmetries: 19 input, 20 runtime, 21 exception handling.
    if (rp.input_validations.empty() != cp.input_validations.empty()) {
        out.push_back(ctx.node_finding(19, exemplar(R, rp.input_validations),
                                       exemplar(C, cp.input_validations),
                                       rp.input_validations.empty()
                                           ? "input-validation-only-in-candidate"
                                           : "input-validation-only-in-reference"));
    }
    if (rp.runtime_validations.empty() != cp.runtime_validations.empty()) {
        out.push_back(ctx.node_finding(
            20, exemplar(R, rp.runtime_validations),
            exemplar(C, cp.runtime_validations),
            rp.runtime_validations.empty() ? "runtime-validation-only-in-candidate"
                                           : "runtime-validation-only-in-reference"));
    }
    if (rp.handlers.empty() != cp.handlers.empty()) {
        int rn = rp.handlers.empty() ? R.focal_func : rp.handlers[0].node;
        int cn = cp.handlers.empty() ? C.focal_func : cp.handlers[0].node;
        out.push_back(ctx.node_finding(21, rn, cn,
                                       rp.handlers.empty()
                                           ? "exception-handling-only-in-candidate"
                                           : "exception-handling-only-in-reference"));
    }

    // Style differences when both sides have the mechanism: 22, 23, 24.
    auto guard_style_differs = [](const GuardStyle& a, const GuardStyle& b,
                                  std::string& why) {
        if (a.raises != b.raises || a.sentinel != b.sentinel) {
            why = "raise-vs-sentinel";
            return true;
        }
        if (a.raised != b.raised) {
            why = "exception-classes";
            return true;
        }
        if (a.logs != b.logs) {
            why = "logging";
            return true;
        }
        return false;
    };
    if (!rp.input_validations.empty() && !cp.input_validations.empty()) {
        std::string why;
        if (guard_style_differs(aggregate(rp.input_validations),
                                aggregate(cp.input_validations), why))
            out.push_back(ctx.node_finding(22, rp.input_validations[0].node,
                                           cp.input_validations[0].node, why));
    }
    if (!rp.runtime_validations.empty() && !cp.runtime_validations.empty()) {
        std::string why;
        if (guard_style_differs(aggregate(rp.runtime_validations),
                                aggregate(cp.runtime_validations), why))
            out.push_back(ctx.node_finding(23, rp.runtime_validations[0].node,
                                           cp.runtime_validations[0].node, why));
    }
    if (!rp.handlers.empty() && !cp.handlers.empty()) {
        auto agg = [](const std::vector<HandlerInfo>& hs) {
            HandlerInfo a;
            for (const HandlerInfo& h : hs) {
                a.caught_classes.insert(h.caught_classes.begin(),
                                        h.caught_classes.end());
                a.raised_classes.insert(h.raised_classes.begin(),
                                        h.raised_classes.end());
                a.raises |= h.raises;
                a.returns_sentinel |= h.returns_sentinel;
                a.logs |= h.logs;
                a.has_else |= h.has_else;
            }
            return a;
        };
        HandlerInfo ra = agg(rp.handlers);
        HandlerInfo ca = agg(cp.handlers);
        std::string why;
        if (ra.caught_classes != ca.caught_classes)
            why = "caught-classes";
        else if (ra.raises != ca.raises || ra.returns_sentinel != ca.returns_sentinel)
            why = "handler-action";
        else if (ra.raised_classes != ca.raised_classes)
            why = "raised-classes";
        else if (ra.logs != ca.logs)
            why = "logging";
        else if (ra.has_else != ca.has_else)
            why = "try-else";
        if (!why.empty())
            out.push_back(ctx.node_finding(24, rp.handlers[0].node,
                                           cp.handlers[0].node, why));
    }
}

void assert_dimension(const std::vector<Finding>& findings, Dimension d) {
    for (const Finding& f : findings) {
        (void)f;
        assert(f.dimension == d);
    }
}

void sort_findings(std::vector<Finding>& findings) {
    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.type_id != b.type_id) return a.type_id < b.type_id;
        if (a.cand_span.start_line != b.cand_span.start_line)
            return a.cand_span.start_line < b.cand_span.start_line;
        if (a.ref_span.start_line != b.ref_span.start_line)
            return a.ref_span.start_line < b.ref_span.start_line;
        return a.rule_note < b.rule_note;
    });
}

}  // namespace

std::vector<Finding> detect_formatting(const CodePair& pair,
                                       const DetectorConfig& config) {
    Ctx ctx(pair, config);
    std::vector<Finding> out;
    naming_format(ctx, out);
    spacing(ctx, out);
    blank_lines(ctx, out);
    inline_usage(ctx, out);
    comment_format(ctx, out);
    statement_organization(ctx, out);
    assert_dimension(out, Dimension::Formatting);
    sort_findings(out);
    return out;
}

std::vector<Finding> detect_semantic(const CodePair& pair,
                                     const DetectorConfig& config) {
    Ctx ctx(pair, config);
    std::vector<Finding> out;
    naming_semantics(ctx, out);
    comment_semantics(ctx, out);
    assert_dimension(out, Dimension::Semantic);
    sort_findings(out);
    return out;
}

std::vector<Finding> detect_expression(const CodePair& pair,
                                       const DetectorConfig& config) {
    Ctx ctx(pair, config);
    std::vector<Finding> out;
    assignment_styles(ctx, out);
    conditional_syntax(ctx, out);
    conditional_expression(ctx, out);
    data_structure_construction(ctx, out);
    api_preference(ctx, out);
    advanced_syntax(ctx, out);
    code_ordering(ctx, out);
    assert_dimension(out, Dimension::ExpressionStatement);
    sort_findings(out);
    return out;
}

std::vector<Finding> detect_control_flow(const CodePair& pair,
                                         const DetectorConfig& config) {
    Ctx ctx(pair, config);
    std::vector<Finding> out;
    loop_structure(ctx, out);
    conditional_structure(ctx, out);
    control_flow_structure(ctx, out);
    assert_dimension(out, Dimension::ControlFlow);
    sort_findings(out);
    return out;
}

std::vector<Finding> detect_fault_tolerance(const CodePair& pair,
                                            const DetectorConfig& config) {
    Ctx ctx(pair, config);
    std::vector<Finding> out;
    fault_presence_and_style(ctx, out);
    assert_dimension(out, Dimension::FaultTolerance);
    sort_findings(out);
    return out;
}

PairReport detect_all(const CodePair& pair, const DetectorConfig& config) {
    PairReport report;
    report.task_id = pair.task_id;
    report.model = pair.model;
    report.candidate_hash = fnv1a_hex(canonicalize(pair.candidate.raw_text));

    if (canonicalize(pair.reference.raw_text) !=
        canonicalize(pair.candidate.raw_text)) {
        auto append = [&](std::vector<Finding> fs) {
            for (Finding& f : fs) report.findings.push_back(std::move(f));
        };
        append(detect_formatting(pair, config));
        append(detect_semantic(pair, config));
        append(detect_expression(pair, config));
        append(detect_control_flow(pair, config));
        append(detect_fault_tolerance(pair, config));
        sort_findings(report.findings);
    }

    for (const Finding& f : report.findings) report.distinct_types.insert(f.type_id);
    report.inconsistent = !report.findings.empty();
    report.readability = compare_readability(pair, config);
    report.conciseness = compare_conciseness(pair, config);
    report.robustness = compare_robustness(pair, config);
    return report;
}

}  // namespace stylediff
