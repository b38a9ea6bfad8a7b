#include "stylediff/align.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace stylediff {

namespace {

StmtClass classify(NodeKind kind) {
    switch (kind) {
        case NodeKind::Assign:
        case NodeKind::AugAssign:
        case NodeKind::AnnAssign:
            return StmtClass::Assignment;
        case NodeKind::Return: return StmtClass::Return;
        case NodeKind::Raise: return StmtClass::Raise;
        case NodeKind::If: return StmtClass::If;
        case NodeKind::For: return StmtClass::For;
        case NodeKind::While: return StmtClass::While;
        case NodeKind::Try: return StmtClass::Try;
        case NodeKind::With: return StmtClass::With;
        case NodeKind::Import:
        case NodeKind::ImportFrom:
            return StmtClass::Import;
        case NodeKind::ExprStmt: return StmtClass::Expr;
        case NodeKind::Pass:
        case NodeKind::Break:
        case NodeKind::Continue:
            return StmtClass::PassLike;
        default:
            return StmtClass::Other;
    }
}

bool is_statement(NodeKind kind) {
    switch (kind) {
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
        case NodeKind::FuncDef:
        case NodeKind::ClassDef:
            return true;
        default:
            return false;
    }
}

void flatten_block(const SourceUnit& unit, int block, int depth,
                   std::vector<StmtEntry>& out);

void flatten_stmt(const SourceUnit& unit, int stmt, int depth, int parent, int pos,
                  std::vector<StmtEntry>& out) {
    const Node& n = unit.nodes[stmt];
    out.push_back(StmtEntry{stmt, classify(n.kind), depth, parent, pos});
    switch (n.kind) {
        case NodeKind::If:
            for (int k : n.kids) {
                const Node& s = unit.nodes[k];
                if (s.kind == NodeKind::Block)
                    flatten_block(unit, k, depth + 1, out);
                else if (s.kind == NodeKind::If)  // elif arm, same depth
                    flatten_stmt(unit, k, depth, parent, pos, out);
            }
            break;
        case NodeKind::For:
        case NodeKind::While:
        case NodeKind::With:
        case NodeKind::FuncDef:
        case NodeKind::ClassDef:
        case NodeKind::Opaque:
            for (int k : n.kids)
                if (unit.nodes[k].kind == NodeKind::Block)
                    flatten_block(unit, k, depth + 1, out);
            break;
        case NodeKind::Try:
            for (int k : n.kids) {
                const Node& s = unit.nodes[k];
                if (s.kind == NodeKind::Block) {
                    flatten_block(unit, k, depth + 1, out);
                } else if (s.kind == NodeKind::Except) {
                    for (int k2 : s.kids)
                        if (unit.nodes[k2].kind == NodeKind::Block)
                            flatten_block(unit, k2, depth + 1, out);
                }
            }
            break;
        default:
            break;
    }
}

void flatten_block(const SourceUnit& unit, int block, int depth,
                   std::vector<StmtEntry>& out) {
    int pos = 0;
    for (int kid : unit.nodes[block].kids) {
        const Node& n = unit.nodes[kid];
        if (!is_statement(n.kind)) continue;
        if (n.flags & kFlagDocstring) {
            ++pos;
            continue;  // docstrings are prompt material, not style
        }
        flatten_stmt(unit, kid, depth, block, pos++, out);
    }
}

}  // namespace

std::vector<StmtEntry> flatten_focal(const SourceUnit& unit) {
    std::vector<StmtEntry> out;
    if (unit.focal_func < 0) return out;
    const Node& fn = unit.nodes[unit.focal_func];
    if (fn.kids.empty()) return out;
    int body = fn.kids.back();
    if (unit.nodes[body].kind != NodeKind::Block) return out;
    flatten_block(unit, body, 0, out);
    return out;
}

std::vector<std::pair<int, int>> align_statements(const std::vector<StmtEntry>& ref,
                                                  const std::vector<StmtEntry>& cand) {
    size_t n = ref.size(), m = cand.size();
    std::vector<std::pair<int, int>> out;
    if (n == 0 || m == 0) return out;
    auto match = [&](size_t i, size_t j) {
        return ref[i].cls == cand[j].cls && ref[i].depth == cand[j].depth;
    };
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (size_t i = n; i-- > 0;)
        for (size_t j = m; j-- > 0;)
            dp[i][j] = match(i, j) ? dp[i + 1][j + 1] + 1
                                   : std::max(dp[i + 1][j], dp[i][j + 1]);
    size_t i = 0, j = 0;
    while (i < n && j < m) {
        if (match(i, j) && dp[i][j] == dp[i + 1][j + 1] + 1) {
            out.emplace_back(static_cast<int>(i), static_cast<int>(j));
            ++i;
            ++j;
        } else if (dp[i + 1][j] >= dp[i][j + 1]) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

namespace {

// Collect simple Name targets of an assignment target expression, in order.
void collect_name_targets(const SourceUnit& u, int expr, std::vector<int>& out) {
    const Node& n = u.nodes[expr];
    if (n.kind == NodeKind::NameExpr) {
        out.push_back(n.head);
    } else if (n.kind == NodeKind::TupleLit || n.kind == NodeKind::ListLit ||
               n.kind == NodeKind::Star) {
        for (int k : n.kids) collect_name_targets(u, k, out);
    }
}

std::vector<int> param_name_tokens(const SourceUnit& u) {
    std::vector<int> out;
    if (u.focal_func < 0) return out;
    for (int k : u.nodes[u.focal_func].kids) {
        if (u.nodes[k].kind != NodeKind::ParamList) continue;
        for (int p : u.nodes[k].kids)
            if (u.nodes[p].head >= 0) out.push_back(u.nodes[p].head);
    }
    return out;
}

}  // namespace

std::vector<NamePair> align_identifiers(const SourceUnit& ref, const SourceUnit& cand,
                                        const std::vector<StmtEntry>& ref_seq,
                                        const std::vector<StmtEntry>& cand_seq,
                                        const std::vector<std::pair<int, int>>& aligned) {
    std::vector<NamePair> out;
    std::set<std::pair<std::string, std::string>> seen;
    auto add = [&](int ref_tok, int cand_tok, const char* role) {
        if (ref_tok < 0 || cand_tok < 0) return;
        NamePair p;
        p.ref_name = ref.tokens[ref_tok].lexeme;
        p.cand_name = cand.tokens[cand_tok].lexeme;
        p.ref_token = ref_tok;
        p.cand_token = cand_tok;
        p.role = role;
        if (seen.emplace(p.ref_name, p.cand_name).second) out.push_back(std::move(p));
    };

    // Parameters by position.
    std::vector<int> ref_params = param_name_tokens(ref);
    std::vector<int> cand_params = param_name_tokens(cand);
    for (size_t i = 0; i < std::min(ref_params.size(), cand_params.size()); ++i)
        add(ref_params[i], cand_params[i], "parameter");

    // Loop and with bindings in order of occurrence.
    auto bindings = [](const SourceUnit& u,
                       const std::vector<StmtEntry>& seq) {
        std::vector<int> toks;
        for (const StmtEntry& e : seq) {
            const Node& n = u.nodes[e.node];
            if (n.kind == NodeKind::For && !n.kids.empty()) {
                collect_name_targets(u, n.kids[0], toks);
            } else if (n.kind == NodeKind::With) {
                for (int k : n.kids)
                    if (u.nodes[k].kind == NodeKind::WithItem &&
                        u.nodes[k].kids.size() > 1)
                        collect_name_targets(u, u.nodes[k].kids[1], toks);
            }
        }
        return toks;
    };
    std::vector<int> ref_binds = bindings(ref, ref_seq);
    std::vector<int> cand_binds = bindings(cand, cand_seq);
    for (size_t i = 0; i < std::min(ref_binds.size(), cand_binds.size()); ++i)
        add(ref_binds[i], cand_binds[i], "binding");

    // Assignment targets within aligned statements, matched positionally.
    for (auto [ri, ci] : aligned) {
        const Node& rn = ref.nodes[ref_seq[ri].node];
        const Node& cn = cand.nodes[cand_seq[ci].node];
        bool r_assign = rn.kind == NodeKind::Assign || rn.kind == NodeKind::AugAssign ||
                        rn.kind == NodeKind::AnnAssign;
        bool c_assign = cn.kind == NodeKind::Assign || cn.kind == NodeKind::AugAssign ||
                        cn.kind == NodeKind::AnnAssign;
        if (!r_assign || !c_assign) continue;
        std::vector<int> r_toks, c_toks;
        collect_name_targets(ref, rn.kids[0], r_toks);
        collect_name_targets(cand, cn.kids[0], c_toks);
        for (size_t i = 0; i < std::min(r_toks.size(), c_toks.size()); ++i)
            add(r_toks[i], c_toks[i], "assignment-target");
    }
    return out;
}

NameConvention name_convention(const std::string& name) {
    if (name.empty()) return NameConvention::Other;
    bool has_underscore = name.find('_') != std::string::npos;
    bool has_lower = false, has_upper = false, starts_upper = false, has_alpha = false;
    for (size_t i = 0; i < name.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(name[i]);
        if (std::isalpha(c)) {
            if (!has_alpha) starts_upper = std::isupper(c);
            has_alpha = true;
            has_lower |= static_cast<bool>(std::islower(c));
            has_upper |= static_cast<bool>(std::isupper(c));
        }
    }
    if (!has_alpha) return NameConvention::Other;
    if (has_underscore) {
        if (has_upper && !has_lower) return NameConvention::ScreamingCase;
        if (!has_upper) return NameConvention::SnakeCase;
        return NameConvention::Other;
    }
    if (has_upper && !has_lower) return NameConvention::ScreamingCase;
    if (!has_upper) return NameConvention::LowerSingle;
    return starts_upper ? NameConvention::PascalCase : NameConvention::CamelCase;
}

std::vector<std::string> split_identifier_words(const std::string& name) {
    std::vector<std::string> words;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            words.push_back(cur);
            cur.clear();
        }
    };
    for (size_t i = 0; i < name.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(name[i]);
        if (c == '_') {
            flush();
            continue;
        }
        if (std::isupper(c) && !cur.empty() &&
            std::islower(static_cast<unsigned char>(cur.back())))
            flush();
        cur += static_cast<char>(std::tolower(c));
    }
    flush();
    return words;
}

}  // namespace stylediff
