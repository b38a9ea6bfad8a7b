#include "stylediff/analysis.hpp"

#include <algorithm>

#include "stylediff/align.hpp"

namespace stylediff {

void walk(const SourceUnit& unit, int node, const std::function<void(int)>& fn) {
    fn(node);
    for (int k : unit.nodes[node].kids) walk(unit, k, fn);
}

std::vector<int> descendants_of_kind(const SourceUnit& unit, int root, NodeKind kind) {
    std::vector<int> out;
    walk(unit, root, [&](int n) {
        if (unit.nodes[n].kind == kind) out.push_back(n);
    });
    return out;
}

bool contains_kind(const SourceUnit& unit, int root, NodeKind kind) {
    bool found = false;
    walk(unit, root, [&](int n) { found |= unit.nodes[n].kind == kind; });
    return found;
}

int focal_body(const SourceUnit& unit) {
    if (unit.focal_func < 0) return -1;
    const Node& fn = unit.nodes[unit.focal_func];
    if (fn.kids.empty()) return -1;
    int body = fn.kids.back();
    return unit.nodes[body].kind == NodeKind::Block ? body : -1;
}

std::vector<std::string> focal_param_names(const SourceUnit& unit) {
    std::vector<std::string> out;
    if (unit.focal_func < 0) return out;
    for (int k : unit.nodes[unit.focal_func].kids) {
        if (unit.nodes[k].kind != NodeKind::ParamList) continue;
        for (int p : unit.nodes[k].kids)
            if (unit.nodes[p].head >= 0)
                out.push_back(unit.tokens[unit.nodes[p].head].lexeme);
    }
    return out;
}

int logical_statement_count(const SourceUnit& unit) {
    int body = focal_body(unit);
    if (body < 0) return 0;
    const Node& fn = unit.nodes[unit.focal_func];
    int count = 0;
    for (const LogicalLine& ll : unit.logical_lines) {
        if (ll.node < 0) continue;
        const Node& n = unit.nodes[ll.node];
        if (n.first < unit.nodes[body].first || n.last > fn.last) continue;
        if (n.flags & kFlagDocstring) continue;
        ++count;
    }
    return count;
}

int max_nesting_depth(const SourceUnit& unit) {
    int body = focal_body(unit);
    if (body < 0) return 0;
    int best = 0;
    std::function<void(int, int)> rec = [&](int node, int depth) {
        const Node& n = unit.nodes[node];
        for (int k : n.kids) {
            if (unit.nodes[k].kind == NodeKind::Block) {
                best = std::max(best, depth + 1);
                rec(k, depth + 1);
            } else {
                rec(k, depth);
            }
        }
    };
    rec(body, 0);
    return best;
}

std::set<std::string> names_in(const SourceUnit& unit, int node) {
    std::set<std::string> out;
    walk(unit, node, [&](int n) {
        if (unit.nodes[n].kind == NodeKind::NameExpr && unit.nodes[n].head >= 0)
            out.insert(unit.tokens[unit.nodes[n].head].lexeme);
    });
    return out;
}

std::string lexeme_signature(const SourceUnit& unit, int node) {
    const Node& n = unit.nodes[node];
    std::string out;
    for (int i = n.first; i <= n.last; ++i) {
        const Token& t = unit.tokens[i];
        switch (t.kind) {
            case TokenKind::Name:
            case TokenKind::Keyword:
            case TokenKind::Number:
            case TokenKind::String:
            case TokenKind::Op:
                if (!out.empty()) out += ' ';
                out += t.lexeme;
                break;
            default:
                break;
        }
    }
    return out;
}

// ------------------------------------------------------------------- calls --

std::vector<CallSite> collect_calls(const SourceUnit& unit, int root) {
    std::vector<CallSite> out;
    walk(unit, root, [&](int n) {
        if (unit.nodes[n].kind != NodeKind::Call) return;
        const Node& call = unit.nodes[n];
        if (call.kids.empty()) return;
        int callee = call.kids[0];
        CallSite site;
        site.node = n;
        const Node& ce = unit.nodes[callee];
        if (ce.kind == NodeKind::NameExpr && ce.head >= 0) {
            site.callee = unit.tokens[ce.head].lexeme;
        } else if (ce.kind == NodeKind::Attribute && ce.head >= 0) {
            site.callee = unit.tokens[ce.head].lexeme;
            site.is_attribute = true;
            int cursor = callee;
            while (unit.nodes[cursor].kind == NodeKind::Attribute &&
                   !unit.nodes[cursor].kids.empty())
                cursor = unit.nodes[cursor].kids[0];
            if (unit.nodes[cursor].kind == NodeKind::NameExpr &&
                unit.nodes[cursor].head >= 0)
                site.receiver_root = unit.tokens[unit.nodes[cursor].head].lexeme;
        } else {
            return;  // call of a computed expression; no stable name
        }
        out.push_back(std::move(site));
    });
    return out;
}

ApiSource classify_call(const CallSite& call,
                        const std::unordered_set<std::string>& repo_symbols,
                        const std::vector<std::string>& local_defs,
                        const std::string& focal_name) {
    if (repo_symbols.count(call.callee)) return ApiSource::RepoDefined;
    if (!call.is_attribute) {
        for (const std::string& def : local_defs)
            if (def == call.callee && def != focal_name)
                return ApiSource::SelfImplemented;
        if (is_builtin_function(call.callee)) return ApiSource::Builtin;
        return ApiSource::ThirdParty;
    }
    if (!call.receiver_root.empty() && is_stdlib_module(call.receiver_root))
        return ApiSource::StandardLibrary;
    if (is_builtin_method(call.callee)) return ApiSource::Builtin;
    return ApiSource::ThirdParty;
}

// -------------------------------------------------- single-use variables --

std::vector<Intermediate> single_use_intermediates(const SourceUnit& unit) {
    std::vector<Intermediate> out;
    int body = focal_body(unit);
    if (body < 0) return out;
    std::vector<std::string> params = focal_param_names(unit);

    std::vector<int> assigns = descendants_of_kind(unit, body, NodeKind::Assign);
    for (int a : assigns) {
        const Node& n = unit.nodes[a];
        if (n.kids.size() != 2) continue;  // single target only
        const Node& target = unit.nodes[n.kids[0]];
        if (target.kind != NodeKind::NameExpr || target.head < 0) continue;
        std::string name = unit.tokens[target.head].lexeme;
        if (std::find(params.begin(), params.end(), name) != params.end()) continue;

        int uses = 0;
        walk(unit, body, [&](int x) {
            const Node& e = unit.nodes[x];
            if (e.kind != NodeKind::NameExpr || e.head < 0) return;
            if (e.head <= target.head) return;  // only reads after assignment
            if (unit.tokens[e.head].lexeme == name) ++uses;
        });
        if (uses == 1) {
            Intermediate im;
            im.assign_node = a;
            im.name = std::move(name);
            im.rhs_node = n.kids[1];
            im.uses = uses;
            out.push_back(std::move(im));
        }
    }
    return out;
}

// ----------------------------------------------------------- fault profile --

namespace {

bool is_sentinel_return(const SourceUnit& unit, int node) {
    const Node& n = unit.nodes[node];
    if (n.kind != NodeKind::Return) return false;
    if (n.kids.empty()) return true;  // bare return
    NodeKind vk = unit.nodes[n.kids[0]].kind;
    if (vk == NodeKind::ConstLit || vk == NodeKind::NumberLit ||
        vk == NodeKind::StringLit)
        return true;
    if ((vk == NodeKind::ListLit || vk == NodeKind::DictLit ||
         vk == NodeKind::TupleLit) &&
        unit.nodes[n.kids[0]].kids.empty())
        return true;
    return false;
}

bool is_logging_call(const SourceUnit& unit, int stmt) {
    for (const CallSite& c : collect_calls(unit, stmt)) {
        if (is_logging_name(c.receiver_root) || is_logging_name(c.callee)) return true;
        if (c.callee == "warn" || c.callee == "warning" || c.callee == "error" ||
            c.callee == "debug" || c.callee == "info" || c.callee == "critical" ||
            c.callee == "exception")
            return true;
    }
    return false;
}

std::set<std::string> raised_class_names(const SourceUnit& unit, int root) {
    std::set<std::string> out;
    for (int r : descendants_of_kind(unit, root, NodeKind::Raise)) {
        const Node& n = unit.nodes[r];
        if (n.kids.empty()) continue;
        int e = n.kids[0];
        const Node& en = unit.nodes[e];
        if (en.kind == NodeKind::Call && !en.kids.empty())
            e = en.kids[0];
        const Node& name = unit.nodes[e];
        if (name.kind == NodeKind::NameExpr && name.head >= 0)
            out.insert(unit.tokens[name.head].lexeme);
    }
    return out;
}

// Tokens of a condition include a validity-shaped test.
bool condition_is_validity_test(const SourceUnit& unit, int cond) {
    const Node& n = unit.nodes[cond];
    for (int i = n.first; i <= n.last; ++i) {
        const Token& t = unit.tokens[i];
        if (t.is_keyword("None") || t.is_keyword("not") || t.is_keyword("is"))
            return true;
        if (t.kind == TokenKind::Name &&
            (t.lexeme == "isinstance" || t.lexeme == "hasattr" ||
             t.lexeme == "callable" || t.lexeme == "issubclass"))
            return true;
    }
    // Comparison against zero: len(x) == 0, n > 0, ...
    for (int i = n.first; i < n.last; ++i) {
        const Token& t = unit.tokens[i];
        if (t.kind == TokenKind::Op &&
            (t.lexeme == "==" || t.lexeme == "!=" || t.lexeme == "<" ||
             t.lexeme == ">" || t.lexeme == "<=" || t.lexeme == ">=")) {
            const Token& rhs = unit.tokens[i + 1];
            if (rhs.kind == TokenKind::Number && rhs.lexeme == "0") return true;
        }
    }
    return false;
}

GuardInfo make_guard(const SourceUnit& unit, int if_node) {
    GuardInfo g;
    g.node = if_node;
    const Node& n = unit.nodes[if_node];
    for (int k : n.kids) {
        if (unit.nodes[k].kind != NodeKind::Block) continue;
        for (int s : unit.statements_of(k)) {
            NodeKind sk = unit.nodes[s].kind;
            if (sk == NodeKind::Raise) g.raises = true;
            if (is_sentinel_return(unit, s)) g.returns_sentinel = true;
            if (sk == NodeKind::ExprStmt && is_logging_call(unit, s)) g.logs = true;
        }
    }
    g.raised_classes = raised_class_names(unit, if_node);
    return g;
}

// First statement of the primary body acts defensively.
bool guard_action_defensive(const SourceUnit& unit, int if_node) {
    const Node& n = unit.nodes[if_node];
    for (int k : n.kids) {
        if (unit.nodes[k].kind != NodeKind::Block) continue;
        std::vector<int> stmts = unit.statements_of(k);
        if (stmts.empty()) return false;
        const Node& first = unit.nodes[stmts[0]];
        if (first.kind == NodeKind::Raise) return true;
        if (first.kind == NodeKind::Continue || first.kind == NodeKind::Break)
            return true;
        if (is_sentinel_return(unit, stmts[0])) return true;
        if (first.kind == NodeKind::ExprStmt && is_logging_call(unit, stmts[0]))
            return true;
        return false;  // only the primary body is inspected
    }
    return false;
}

}  // namespace

FaultProfile fault_profile(const SourceUnit& unit) {
    FaultProfile profile;
    int body = focal_body(unit);
    if (body < 0) return profile;

    std::vector<std::string> params = focal_param_names(unit);
    auto references_only_params = [&](int cond) {
        for (const std::string& name : names_in(unit, cond)) {
            bool is_param =
                std::find(params.begin(), params.end(), name) != params.end();
            if (!is_param && !is_builtin_function(name)) return false;
        }
        return !params.empty();
    };

    // Leading conditionals over parameters are input validation.
    std::set<int> leading;
    for (int s : unit.statements_of(body)) {
        const Node& n = unit.nodes[s];
        if (n.flags & kFlagDocstring) continue;
        if (n.kind != NodeKind::If) break;
        if (!references_only_params(n.kids[0])) break;
        leading.insert(s);
        profile.input_validations.push_back(make_guard(unit, s));
    }

    // Other defensive conditionals are runtime validation.
    for (int i : descendants_of_kind(unit, body, NodeKind::If)) {
        if (leading.count(i)) continue;
        if (unit.nodes[i].flags & kFlagElif) continue;
        if (!guard_action_defensive(unit, i)) continue;
        const Node& n = unit.nodes[i];
        bool defensive_condition = condition_is_validity_test(unit, n.kids[0]);
        bool unambiguous_action = false;
        for (int k : n.kids) {
            if (unit.nodes[k].kind != NodeKind::Block) continue;
            std::vector<int> stmts = unit.statements_of(k);
            if (!stmts.empty()) {
                const Node& first = unit.nodes[stmts[0]];
                if (first.kind == NodeKind::Raise ||
                    (first.kind == NodeKind::ExprStmt &&
                     is_logging_call(unit, stmts[0])))
                    unambiguous_action = true;
            }
            break;
        }
        if (defensive_condition || unambiguous_action)
            profile.runtime_validations.push_back(make_guard(unit, i));
    }

    // Exception handling.
    for (int t : descendants_of_kind(unit, body, NodeKind::Try)) {
        HandlerInfo h;
        h.node = t;
        const Node& n = unit.nodes[t];
        h.has_else = (n.flags & kFlagHasElse) != 0;
        for (int k : n.kids) {
            if (unit.nodes[k].kind != NodeKind::Except) continue;
            const Node& ex = unit.nodes[k];
            if (!ex.kids.empty() && unit.nodes[ex.kids[0]].kind != NodeKind::Block) {
                for (const std::string& nm : names_in(unit, ex.kids[0]))
                    h.caught_classes.insert(nm);
            }
            int handler_block = ex.kids.empty() ? -1 : ex.kids.back();
            if (handler_block >= 0 &&
                unit.nodes[handler_block].kind == NodeKind::Block) {
                for (int s : unit.statements_of(handler_block)) {
                    if (unit.nodes[s].kind == NodeKind::Raise) h.raises = true;
                    if (is_sentinel_return(unit, s)) h.returns_sentinel = true;
                    if (is_logging_call(unit, s)) h.logs = true;
                }
                for (const std::string& nm : raised_class_names(unit, handler_block))
                    h.raised_classes.insert(nm);
            }
        }
        profile.handlers.push_back(std::move(h));
    }
    return profile;
}

// -------------------------------------------------------- advanced syntax --

std::vector<std::string> FeatureSet::names() const {
    std::vector<std::string> out;
    if (lambda_expr) out.push_back("lambda");
    if (comprehension) out.push_back("comprehension");
    if (generator_expr) out.push_back("generator-expression");
    if (conditional_expr) out.push_back("conditional-expression");
    if (unpacking) out.push_back("unpacking");
    if (with_statement) out.push_back("with-statement");
    if (decorator) out.push_back("decorator");
    return out;
}

FeatureSet advanced_features(const SourceUnit& unit) {
    FeatureSet f;
    if (unit.focal_func < 0) return f;
    walk(unit, unit.focal_func, [&](int n) {
        switch (unit.nodes[n].kind) {
            case NodeKind::Lambda: f.lambda_expr = true; break;
            case NodeKind::ListComp:
            case NodeKind::SetComp:
            case NodeKind::DictComp:
                f.comprehension = true;
                break;
            case NodeKind::GenExp: f.generator_expr = true; break;
            case NodeKind::IfExp: f.conditional_expr = true; break;
            case NodeKind::With: f.with_statement = true; break;
            case NodeKind::Decorator: f.decorator = true; break;
            case NodeKind::Star: f.unpacking = true; break;
            case NodeKind::Assign:
            case NodeKind::For: {
                const Node& s = unit.nodes[n];
                if (!s.kids.empty() &&
                    unit.nodes[s.kids[0]].kind == NodeKind::TupleLit)
                    f.unpacking = true;
                break;
            }
            default: break;
        }
    });
    return f;
}

// ------------------------------------------------------------ comparisons --

std::vector<ComparisonFact> integer_comparisons(const SourceUnit& unit) {
    std::vector<ComparisonFact> out;
    if (unit.focal_func < 0) return out;
    for (int c : descendants_of_kind(unit, unit.focal_func, NodeKind::Compare)) {
        const Node& n = unit.nodes[c];
        if (n.kids.size() != 2) continue;
        const Node& rhs = unit.nodes[n.kids[1]];
        if (rhs.kind != NodeKind::NumberLit) continue;
        const std::string& lit = unit.tokens[rhs.first].lexeme;
        if (lit.find_first_not_of("0123456789") != std::string::npos) continue;
        // The operator sits between the operands.
        std::string op;
        for (int i = unit.nodes[n.kids[0]].last + 1; i < rhs.first; ++i) {
            const Token& t = unit.tokens[i];
            if (t.kind == TokenKind::Op &&
                (t.lexeme == "<" || t.lexeme == ">" || t.lexeme == "<=" ||
                 t.lexeme == ">="))
                op = t.lexeme;
        }
        if (op.empty()) continue;
        ComparisonFact fact;
        fact.node = c;
        fact.left_signature = lexeme_signature(unit, n.kids[0]);
        fact.op = op;
        fact.literal = std::stoll(lit);
        out.push_back(std::move(fact));
    }
    return out;
}

// ------------------------------------------------------------- collections --

const char* build_class_name(BuildClass c) {
    switch (c) {
        case BuildClass::Literal: return "literal";
        case BuildClass::Constructor: return "constructor-call";
        case BuildClass::Comprehension: return "comprehension";
        case BuildClass::Generator: return "generator";
        case BuildClass::IncrementalLoop: return "incremental-loop";
    }
    return "?";
}

std::string normalized_words(const std::string& name) {
    std::string out;
    for (const std::string& w : split_identifier_words(name)) {
        if (!out.empty()) out += '_';
        out += w;
    }
    return out;
}

namespace {

bool is_collection_constructor(const std::string& name) {
    return name == "list" || name == "dict" || name == "set" || name == "tuple" ||
           name == "frozenset";
}

// Does any loop in the body incrementally grow `name`?
bool loop_grows(const SourceUnit& unit, int body, const std::string& name) {
    static const std::set<std::string> grow_methods = {
        "append", "add", "insert", "extend", "update", "push"};
    std::vector<int> loops = descendants_of_kind(unit, body, NodeKind::For);
    for (int w : descendants_of_kind(unit, body, NodeKind::While)) loops.push_back(w);
    for (int loop : loops) {
        bool grows = false;
        walk(unit, loop, [&](int x) {
            const Node& n = unit.nodes[x];
            if (n.kind == NodeKind::Call && !n.kids.empty()) {
                const Node& callee = unit.nodes[n.kids[0]];
                if (callee.kind == NodeKind::Attribute && callee.head >= 0 &&
                    grow_methods.count(unit.tokens[callee.head].lexeme) &&
                    !callee.kids.empty()) {
                    const Node& recv = unit.nodes[callee.kids[0]];
                    if (recv.kind == NodeKind::NameExpr && recv.head >= 0 &&
                        unit.tokens[recv.head].lexeme == name)
                        grows = true;
                }
            }
            if ((n.kind == NodeKind::Assign || n.kind == NodeKind::AugAssign) &&
                !n.kids.empty()) {
                const Node& target = unit.nodes[n.kids[0]];
                if (n.kind == NodeKind::AugAssign && target.kind == NodeKind::NameExpr &&
                    target.head >= 0 && unit.tokens[target.head].lexeme == name)
                    grows = true;
                if (target.kind == NodeKind::Subscript && !target.kids.empty()) {
                    const Node& recv = unit.nodes[target.kids[0]];
                    if (recv.kind == NodeKind::NameExpr && recv.head >= 0 &&
                        unit.tokens[recv.head].lexeme == name)
                        grows = true;
                }
            }
        });
        if (grows) return true;
    }
    return false;
}

}  // namespace

std::vector<CollectionBuild> collection_builds(const SourceUnit& unit) {
    std::vector<CollectionBuild> out;
    int body = focal_body(unit);
    if (body < 0) return out;

    // Names returned by plain `return name` statements: their builds also
    // carry the <return> role so cross-side roles can match.
    std::set<std::string> returned_names;
    for (int r : descendants_of_kind(unit, body, NodeKind::Return)) {
        const Node& n = unit.nodes[r];
        if (n.kids.size() == 1 && unit.nodes[n.kids[0]].kind == NodeKind::NameExpr &&
            unit.nodes[n.kids[0]].head >= 0)
            returned_names.insert(unit.tokens[unit.nodes[n.kids[0]].head].lexeme);
    }

    auto classify_value = [&](int value,
                              const std::string& name) -> std::vector<BuildClass> {
        const Node& v = unit.nodes[value];
        switch (v.kind) {
            case NodeKind::ListLit:
            case NodeKind::DictLit:
            case NodeKind::SetLit:
                if (v.kids.empty() && !name.empty() && loop_grows(unit, body, name))
                    return {BuildClass::IncrementalLoop};
                return {BuildClass::Literal};
            case NodeKind::ListComp:
            case NodeKind::SetComp:
            case NodeKind::DictComp:
                return {BuildClass::Comprehension};
            case NodeKind::GenExp:
                return {BuildClass::Generator};
            case NodeKind::Call: {
                if (v.kids.empty()) return {};
                const Node& callee = unit.nodes[v.kids[0]];
                if (callee.kind == NodeKind::NameExpr && callee.head >= 0 &&
                    is_collection_constructor(unit.tokens[callee.head].lexeme)) {
                    if (v.kids.size() == 1 && !name.empty() &&
                        loop_grows(unit, body, name))
                        return {BuildClass::IncrementalLoop};
                    return {BuildClass::Constructor};
                }
                return {};
            }
            default:
                return {};
        }
    };

    for (int a : descendants_of_kind(unit, body, NodeKind::Assign)) {
        const Node& n = unit.nodes[a];
        if (n.kids.size() != 2) continue;
        const Node& target = unit.nodes[n.kids[0]];
        if (target.kind != NodeKind::NameExpr || target.head < 0) continue;
        std::string name = unit.tokens[target.head].lexeme;
        for (BuildClass cls : classify_value(n.kids[1], name)) {
            out.push_back({normalized_words(name), cls, a});
            if (returned_names.count(name)) out.push_back({"<return>", cls, a});
        }
    }
    for (int r : descendants_of_kind(unit, body, NodeKind::Return)) {
        const Node& n = unit.nodes[r];
        if (n.kids.size() != 1) continue;
        for (BuildClass cls : classify_value(n.kids[0], ""))
            out.push_back({"<return>", cls, r});
    }
    return out;
}

}  // namespace stylediff
