#include <algorithm>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "stylediff/errors.hpp"
#include "stylediff/lexer.hpp"
#include "stylediff/source_unit.hpp"

namespace stylediff {

namespace {

bool is_aug_op(const Token& t) {
    if (t.kind != TokenKind::Op) return false;
    static const char* ops[] = {"+=", "-=", "*=", "/=", "//=", "%=",
                                "**=", ">>=", "<<=", "&=", "|=", "^=", "@="};
    for (const char* op : ops)
        if (t.lexeme == op) return true;
    return false;
}

bool is_comparison_start(const Token& t, const Token& after) {
    if (t.is_keyword("in") || t.is_keyword("is")) return true;
    if (t.is_keyword("not") && after.is_keyword("in")) return true;
    if (t.kind != TokenKind::Op) return false;
    static const char* ops[] = {"<", ">", "<=", ">=", "==", "!="};
    for (const char* op : ops)
        if (t.lexeme == op) return true;
    return false;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::vector<Node>& nodes)
        : toks_(tokens), nodes_(nodes) {
        for (int i = 0; i < static_cast<int>(toks_.size()); ++i) {
            TokenKind k = toks_[i].kind;
            if (k != TokenKind::Comment && k != TokenKind::Nl) sig_.push_back(i);
        }
    }

    int parse_module() {
        int mod = make(NodeKind::Module);
        std::vector<int> kids;
        while (!at_kind(TokenKind::EndMarker)) {
            if (at_kind(TokenKind::Newline) || at_kind(TokenKind::Dedent)) {
                take();
                continue;
            }
            if (at_kind(TokenKind::Indent)) throw err("unexpected indent");
            parse_statement_into(kids);
        }
        nodes_[mod].kids = std::move(kids);
        nodes_[mod].first = 0;
        nodes_[mod].last = static_cast<int>(toks_.size()) - 1;
        return mod;
    }

private:
    const std::vector<Token>& toks_;
    std::vector<Node>& nodes_;
    std::vector<int> sig_;
    size_t ip_ = 0;
    int last_consumed_ = -1;

    // --- cursor -------------------------------------------------------------

    const Token& cur() const { return toks_[sig_[ip_]]; }
    int cur_index() const { return sig_[ip_]; }
    const Token& la(size_t n) const {
        size_t i = std::min(ip_ + n, sig_.size() - 1);
        return toks_[sig_[i]];
    }
    bool at_kind(TokenKind k) const { return cur().kind == k; }
    bool at_op(const char* op) const { return cur().is_op(op); }
    bool at_kw(const char* kw) const { return cur().is_keyword(kw); }

    int take() {
        int idx = cur_index();
        if (ip_ < sig_.size() - 1) ++ip_;
        last_consumed_ = std::max(last_consumed_, idx);
        return idx;
    }

    ParseError err(const std::string& msg) const {
        return ParseError(msg, cur().line, cur().column);
    }
    int expect_op(const char* op) {
        if (!at_op(op)) throw err(std::string("expected '") + op + "'");
        return take();
    }
    int expect_kw(const char* kw) {
        if (!at_kw(kw)) throw err(std::string("expected '") + kw + "'");
        return take();
    }
    int expect_name() {
        if (!at_kind(TokenKind::Name)) throw err("expected identifier");
        return take();
    }
    void expect_newline() {
        if (at_kind(TokenKind::Newline)) {
            take();
            return;
        }
        if (at_kind(TokenKind::EndMarker)) return;
        throw err("expected end of line");
    }

    // --- node helpers ---------------------------------------------------------

    int make(NodeKind kind) {
        nodes_.push_back(Node{kind});
        return static_cast<int>(nodes_.size()) - 1;
    }
    // The kid argument is fully evaluated before nodes_ is indexed, so
    // recursive parses cannot invalidate the reference mid-expression.
    void add_kid(int n, int kid) { nodes_[n].kids.push_back(kid); }
    void close(int n, int first_tok) {
        nodes_[n].first = first_tok;
        int last = first_tok;
        for (int k : nodes_[n].kids) last = std::max(last, nodes_[k].last);
        last = std::max(last, last_consumed_);
        nodes_[n].last = last;
    }

    // =========================== statements ===================================

    void parse_statement_into(std::vector<int>& out) {
        size_t start_ip = ip_;
        size_t nodes_mark = nodes_.size();
        size_t out_mark = out.size();
        bool is_def = at_kw("def") || at_op("@") ||
                      (at_kw("async") && la(1).is_keyword("def"));
        try {
            dispatch_statement(out);
        } catch (const ParseError&) {
            if (is_def) throw;
            ip_ = start_ip;
            nodes_.resize(nodes_mark);
            out.resize(out_mark);
            out.push_back(parse_opaque());
        }
    }

    void dispatch_statement(std::vector<int>& out) {
        if (at_op("@") || at_kw("def") ||
            (at_kw("async") && la(1).is_keyword("def"))) {
            out.push_back(parse_funcdef());
            return;
        }
        if (at_kw("class")) {
            out.push_back(parse_classdef());
            return;
        }
        if (at_kw("async") && (la(1).is_keyword("for") || la(1).is_keyword("with"))) {
            int async_tok = take();
            int stmt = at_kw("for") ? parse_for() : parse_with();
            nodes_[stmt].flags |= kFlagAsync;
            nodes_[stmt].first = async_tok;
            out.push_back(stmt);
            return;
        }
        if (at_kw("if")) {
            out.push_back(parse_if(false));
            return;
        }
        if (at_kw("for")) {
            out.push_back(parse_for());
            return;
        }
        if (at_kw("while")) {
            out.push_back(parse_while());
            return;
        }
        if (at_kw("try")) {
            out.push_back(parse_try());
            return;
        }
        if (at_kw("with")) {
            out.push_back(parse_with());
            return;
        }
        parse_simple_line(out);
    }

    void parse_simple_line(std::vector<int>& out) {
        out.push_back(parse_small_stmt());
        while (at_op(";")) {
            take();
            if (at_kind(TokenKind::Newline) || at_kind(TokenKind::EndMarker)) break;
            out.push_back(parse_small_stmt());
        }
        expect_newline();
    }

    bool at_line_end() const {
        return at_kind(TokenKind::Newline) || at_kind(TokenKind::EndMarker) ||
               at_op(";");
    }

    int keyword_stmt(NodeKind kind) {
        int n = make(kind);
        int first = take();
        close(n, first);
        return n;
    }

    int parse_small_stmt() {
        if (at_kw("pass")) return keyword_stmt(NodeKind::Pass);
        if (at_kw("break")) return keyword_stmt(NodeKind::Break);
        if (at_kw("continue")) return keyword_stmt(NodeKind::Continue);
        if (at_kw("return")) {
            int n = make(NodeKind::Return);
            int first = take();
            if (!at_line_end()) add_kid(n, parse_testlist());
            close(n, first);
            return n;
        }
        if (at_kw("raise")) {
            int n = make(NodeKind::Raise);
            int first = take();
            if (!at_line_end()) {
                add_kid(n, parse_expr());
                if (at_kw("from")) {
                    take();
                    add_kid(n, parse_expr());
                }
            }
            close(n, first);
            return n;
        }
        if (at_kw("import")) return swallow_line(NodeKind::Import);
        if (at_kw("from")) return swallow_line(NodeKind::ImportFrom);
        if (at_kw("global") || at_kw("nonlocal")) return swallow_line(NodeKind::Global);
        if (at_kw("del")) {
            int n = make(NodeKind::Del);
            int first = take();
            add_kid(n, parse_testlist());
            close(n, first);
            return n;
        }
        if (at_kw("assert")) {
            int n = make(NodeKind::Assert);
            int first = take();
            add_kid(n, parse_expr());
            if (at_op(",")) {
                take();
                add_kid(n, parse_expr());
            }
            close(n, first);
            return n;
        }
        if (at_kw("yield")) {
            int n = make(NodeKind::ExprStmt);
            int y = parse_yield();
            add_kid(n, y);
            close(n, nodes_[y].first);
            return n;
        }
        return parse_expr_statement();
    }

    // import / from-import / global: span-only statements.
    int swallow_line(NodeKind kind) {
        int n = make(kind);
        int first = take();
        int depth = 0;
        while (!at_kind(TokenKind::Newline) && !at_kind(TokenKind::EndMarker)) {
            if (at_op("(") || at_op("[")) ++depth;
            if (at_op(")") || at_op("]")) --depth;
            if (depth < 0) throw err("unbalanced brackets");
            if (at_op(";") && depth == 0) break;
            take();
        }
        close(n, first);
        return n;
    }

    int parse_expr_statement() {
        int first_tok = cur_index();
        int lhs = parse_testlist_star();
        if (at_op(":")) {
            take();
            int ann = parse_expr();
            int n = make(NodeKind::AnnAssign);
            nodes_[n].kids = {lhs, ann};
            if (at_op("=")) {
                take();
                add_kid(n, parse_value_expr());
            }
            close(n, first_tok);
            return n;
        }
        if (at_op("=")) {
            std::vector<int> parts = {lhs};
            while (at_op("=")) {
                take();
                parts.push_back(parse_value_expr());
            }
            int n = make(NodeKind::Assign);
            nodes_[n].kids = std::move(parts);
            close(n, first_tok);
            return n;
        }
        if (is_aug_op(cur())) {
            int op_tok = take();
            int value = parse_value_expr();
            int n = make(NodeKind::AugAssign);
            nodes_[n].kids = {lhs, value};
            nodes_[n].head = op_tok;
            close(n, first_tok);
            return n;
        }
        int n = make(NodeKind::ExprStmt);
        nodes_[n].kids = {lhs};
        close(n, first_tok);
        return n;
    }

    int parse_value_expr() {
        if (at_kw("yield")) return parse_yield();
        return parse_testlist_star();
    }

    int parse_yield() {
        int n = make(NodeKind::Yield);
        int first = expect_kw("yield");
        if (at_kw("from")) {
            take();
            nodes_[n].flags |= kFlagYieldFrom;
            add_kid(n, parse_expr());
        } else if (!at_line_end() && !at_op(")") && !at_op("]") && !at_op("}") &&
                   !at_op(",") && !at_op(":")) {
            add_kid(n, parse_testlist());
        }
        close(n, first);
        return n;
    }

    // Unrecognized construct: swallow the logical line; when it ends with a
    // ':' also parse the indented block so nested code is still analyzed.
    int parse_opaque() {
        int n = make(NodeKind::Opaque);
        int first = cur_index();
        int prev_real = -1;
        while (!at_kind(TokenKind::Newline) && !at_kind(TokenKind::EndMarker)) {
            if (at_kind(TokenKind::Indent) || at_kind(TokenKind::Dedent)) {
                take();
                continue;
            }
            prev_real = take();
        }
        bool has_block = prev_real >= 0 && toks_[prev_real].is_op(":");
        if (at_kind(TokenKind::Newline)) take();
        if (has_block && at_kind(TokenKind::Indent))
            add_kid(n, parse_indented_block());
        close(n, first);
        return n;
    }

    // ---------------------------- compounds ------------------------------------

    int parse_funcdef() {
        std::vector<int> decorators;
        int first_tok = cur_index();
        while (at_op("@")) {
            int d = make(NodeKind::Decorator);
            int dfirst = take();
            add_kid(d, parse_expr());
            close(d, dfirst);
            decorators.push_back(d);
            expect_newline();
        }
        uint32_t flags = 0;
        if (at_kw("async")) {
            take();
            flags |= kFlagAsync;
        }
        expect_kw("def");
        int n = make(NodeKind::FuncDef);
        int name_tok = expect_name();
        int params = parse_params();
        if (at_op("->")) {
            take();
            parse_expr();
        }
        expect_op(":");
        int body = parse_suite();
        nodes_[n].kids = std::move(decorators);
        add_kid(n, params);
        add_kid(n, body);
        nodes_[n].head = name_tok;
        nodes_[n].flags = flags;
        close(n, first_tok);
        return n;
    }

    int parse_params() {
        int n = make(NodeKind::ParamList);
        int first = expect_op("(");
        while (!at_op(")")) {
            int p = make(NodeKind::Param);
            int pfirst = cur_index();
            if (at_op("*") || at_op("**")) take();
            if (at_op("/")) {
                take();  // positional-only marker
            } else if (at_kind(TokenKind::Name)) {
                nodes_[p].head = take();
                if (at_op(":")) {
                    take();
                    add_kid(p, parse_expr());
                }
                if (at_op("=")) {
                    take();
                    add_kid(p, parse_expr());
                }
            }
            close(p, pfirst);
            add_kid(n, p);
            if (at_op(","))
                take();
            else
                break;
        }
        expect_op(")");
        close(n, first);
        return n;
    }

    int parse_classdef() {
        int n = make(NodeKind::ClassDef);
        int first = expect_kw("class");
        nodes_[n].head = expect_name();
        if (at_op("(")) {
            take();
            int depth = 1;
            while (depth > 0 && !at_kind(TokenKind::EndMarker)) {
                if (at_op("(") || at_op("[") || at_op("{")) ++depth;
                if (at_op(")") || at_op("]") || at_op("}")) --depth;
                take();
            }
        }
        expect_op(":");
        add_kid(n, parse_suite());
        close(n, first);
        return n;
    }

    int parse_if(bool is_elif) {
        int n = make(NodeKind::If);
        int first = at_kw("if") ? expect_kw("if") : expect_kw("elif");
        if (is_elif) nodes_[n].flags |= kFlagElif;
        int cond = parse_namedexpr();
        expect_op(":");
        int body = parse_suite();
        nodes_[n].kids = {cond, body};
        if (at_kw("elif")) {
            add_kid(n, parse_if(true));
        } else if (at_kw("else")) {
            take();
            expect_op(":");
            add_kid(n, parse_suite());
            nodes_[n].flags |= kFlagHasElse;
        }
        close(n, first);
        return n;
    }

    int parse_for() {
        int n = make(NodeKind::For);
        int first = expect_kw("for");
        int target = parse_target_list();
        expect_kw("in");
        int iter = parse_testlist();
        expect_op(":");
        int body = parse_suite();
        nodes_[n].kids = {target, iter, body};
        if (at_kw("else")) {
            take();
            expect_op(":");
            add_kid(n, parse_suite());
            nodes_[n].flags |= kFlagHasElse;
        }
        close(n, first);
        return n;
    }

    int parse_while() {
        int n = make(NodeKind::While);
        int first = expect_kw("while");
        int cond = parse_namedexpr();
        expect_op(":");
        int body = parse_suite();
        nodes_[n].kids = {cond, body};
        if (at_kw("else")) {
            take();
            expect_op(":");
            add_kid(n, parse_suite());
            nodes_[n].flags |= kFlagHasElse;
        }
        close(n, first);
        return n;
    }

    int parse_try() {
        int n = make(NodeKind::Try);
        int first = expect_kw("try");
        expect_op(":");
        add_kid(n, parse_suite());
        bool any_handler = false;
        while (at_kw("except")) {
            any_handler = true;
            int h = make(NodeKind::Except);
            int hfirst = take();
            if (!at_op(":")) {
                add_kid(h, parse_expr());
                if (at_kw("as")) {
                    take();
                    nodes_[h].head = expect_name();
                }
            }
            expect_op(":");
            add_kid(h, parse_suite());
            close(h, hfirst);
            add_kid(n, h);
        }
        if (at_kw("else")) {
            if (!any_handler) throw err("try/else without except");
            take();
            expect_op(":");
            add_kid(n, parse_suite());
            nodes_[n].flags |= kFlagHasElse;
        }
        if (at_kw("finally")) {
            take();
            expect_op(":");
            add_kid(n, parse_suite());
            nodes_[n].flags |= kFlagHasFinally;
        }
        if (!any_handler && !(nodes_[n].flags & kFlagHasFinally))
            throw err("try without except or finally");
        close(n, first);
        return n;
    }

    int parse_with() {
        int n = make(NodeKind::With);
        int first = expect_kw("with");
        while (true) {
            int item = make(NodeKind::WithItem);
            int ifirst = cur_index();
            add_kid(item, parse_expr());
            if (at_kw("as")) {
                take();
                add_kid(item, parse_target());
            }
            close(item, ifirst);
            add_kid(n, item);
            if (at_op(","))
                take();
            else
                break;
        }
        expect_op(":");
        add_kid(n, parse_suite());
        close(n, first);
        return n;
    }

    // A suite is either an indented block or small statements on the header line.
    int parse_suite() {
        if (at_kind(TokenKind::Newline)) {
            take();
            if (!at_kind(TokenKind::Indent)) throw err("expected an indented block");
            return parse_indented_block();
        }
        int b = make(NodeKind::Block);
        std::vector<int> kids;
        int first = cur_index();
        parse_simple_line(kids);
        nodes_[b].kids = std::move(kids);
        close(b, first);
        return b;
    }

    int parse_indented_block() {
        expect_indent();
        int b = make(NodeKind::Block);
        std::vector<int> kids;
        int first = cur_index();
        while (!at_kind(TokenKind::Dedent) && !at_kind(TokenKind::EndMarker)) {
            if (at_kind(TokenKind::Newline)) {
                take();
                continue;
            }
            parse_statement_into(kids);
        }
        if (at_kind(TokenKind::Dedent)) take();
        if (kids.empty()) throw err("empty block");
        nodes_[b].kids = std::move(kids);
        close(b, first);
        return b;
    }

    void expect_indent() {
        if (!at_kind(TokenKind::Indent)) throw err("expected an indented block");
        take();
    }

    // =========================== expressions ===================================

    // testlist: expr (',' expr)* [','] -- an unparenthesized tuple when >1.
    int parse_testlist() { return parse_list_of([this] { return parse_expr(); }); }
    int parse_testlist_star() {
        return parse_list_of([this] { return parse_star_or_expr(); });
    }

    template <typename F>
    int parse_list_of(F element) {
        int first_tok = cur_index();
        int e = element();
        if (!at_op(",")) return e;
        std::vector<int> elems = {e};
        while (at_op(",")) {
            take();
            if (at_line_end() || at_op("=") || at_op(")") || at_op("]") ||
                at_op("}") || at_op(":"))
                break;  // trailing comma
            elems.push_back(element());
        }
        int n = make(NodeKind::TupleLit);
        nodes_[n].kids = std::move(elems);
        close(n, first_tok);
        return n;
    }

    int parse_star_or_expr() {
        if (at_op("*")) {
            int n = make(NodeKind::Star);
            int first = take();
            add_kid(n, parse_expr());
            close(n, first);
            return n;
        }
        return parse_expr();
    }

    int parse_namedexpr() {
        int first_tok = cur_index();
        int e = parse_expr();
        if (at_op(":=")) {
            take();
            int v = parse_expr();
            int n = make(NodeKind::BinOp);
            nodes_[n].kids = {e, v};
            close(n, first_tok);
            return n;
        }
        return e;
    }

    int parse_expr() {
        if (at_kw("lambda")) return parse_lambda();
        int first_tok = cur_index();
        int e = parse_or_test();
        if (at_kw("if")) {
            take();
            int cond = parse_or_test();
            expect_kw("else");
            int orelse = parse_expr();
            int n = make(NodeKind::IfExp);
            nodes_[n].kids = {e, cond, orelse};
            close(n, first_tok);
            return n;
        }
        return e;
    }

    int parse_lambda() {
        int n = make(NodeKind::Lambda);
        int first = expect_kw("lambda");
        while (!at_op(":")) {
            if (at_op("*") || at_op("**")) take();
            if (at_kind(TokenKind::Name)) {
                int p = make(NodeKind::Param);
                nodes_[p].head = take();
                close(p, nodes_[p].head);
                add_kid(n, p);
                if (at_op("=")) {
                    take();
                    parse_expr();
                }
            }
            if (at_op(","))
                take();
            else
                break;
        }
        expect_op(":");
        add_kid(n, parse_expr());
        close(n, first);
        return n;
    }

    int parse_bool_chain(bool is_or) {
        auto sub = [&] { return is_or ? parse_and_test() : parse_not_test(); };
        const char* kw = is_or ? "or" : "and";
        int first_tok = cur_index();
        int e = sub();
        if (!at_kw(kw)) return e;
        std::vector<int> opnds = {e};
        while (at_kw(kw)) {
            take();
            opnds.push_back(sub());
        }
        int n = make(NodeKind::BoolOp);
        if (is_or) nodes_[n].flags |= kFlagBoolOr;
        nodes_[n].kids = std::move(opnds);
        close(n, first_tok);
        return n;
    }

    int parse_or_test() { return parse_bool_chain(true); }
    int parse_and_test() { return parse_bool_chain(false); }

    int parse_not_test() {
        if (at_kw("not")) {
            int n = make(NodeKind::UnaryOp);
            int first = take();
            add_kid(n, parse_not_test());
            close(n, first);
            return n;
        }
        return parse_comparison();
    }

    int parse_comparison() {
        int first_tok = cur_index();
        int e = parse_bitor();
        if (!is_comparison_start(cur(), la(1))) return e;
        std::vector<int> opnds = {e};
        while (is_comparison_start(cur(), la(1))) {
            if (at_kw("not")) {
                take();  // not in
                expect_kw("in");
            } else if (at_kw("is")) {
                take();
                if (at_kw("not")) take();
            } else {
                take();
            }
            opnds.push_back(parse_bitor());
        }
        int n = make(NodeKind::Compare);
        nodes_[n].kids = std::move(opnds);
        close(n, first_tok);
        return n;
    }

    template <typename Sub>
    int parse_binop_level(Sub sub, std::initializer_list<const char*> ops) {
        int first_tok = cur_index();
        int e = sub();
        auto at_any = [&] {
            for (const char* op : ops)
                if (at_op(op)) return true;
            return false;
        };
        while (at_any()) {
            take();
            int rhs = sub();
            int n = make(NodeKind::BinOp);
            nodes_[n].kids = {e, rhs};
            close(n, first_tok);
            e = n;
        }
        return e;
    }

    int parse_bitor() {
        return parse_binop_level([this] { return parse_bitxor(); }, {"|"});
    }
    int parse_bitxor() {
        return parse_binop_level([this] { return parse_bitand(); }, {"^"});
    }
    int parse_bitand() {
        return parse_binop_level([this] { return parse_shift(); }, {"&"});
    }
    int parse_shift() {
        return parse_binop_level([this] { return parse_arith(); }, {"<<", ">>"});
    }
    int parse_arith() {
        return parse_binop_level([this] { return parse_term(); }, {"+", "-"});
    }
    int parse_term() {
        return parse_binop_level([this] { return parse_factor(); },
                                 {"*", "/", "//", "%", "@"});
    }

    int parse_factor() {
        if (at_op("+") || at_op("-") || at_op("~")) {
            int n = make(NodeKind::UnaryOp);
            int first = take();
            add_kid(n, parse_factor());
            close(n, first);
            return n;
        }
        return parse_power();
    }

    int parse_power() {
        int first_tok = cur_index();
        int e = parse_unary_postfix();
        if (at_op("**")) {
            take();
            int rhs = parse_factor();  // right-associative
            int n = make(NodeKind::BinOp);
            nodes_[n].kids = {e, rhs};
            close(n, first_tok);
            return n;
        }
        return e;
    }

    int parse_unary_postfix() {
        if (at_kw("await")) {
            int n = make(NodeKind::Await);
            int first = take();
            add_kid(n, parse_unary_postfix());
            close(n, first);
            return n;
        }
        return parse_atom_trailers();
    }

    int parse_atom_trailers() {
        int e = parse_atom();
        while (true) {
            if (at_op("(")) {
                e = parse_call(e);
            } else if (at_op(".")) {
                int first_tok = nodes_[e].first;
                take();
                int name_tok = expect_name();
                int n = make(NodeKind::Attribute);
                nodes_[n].kids = {e};
                nodes_[n].head = name_tok;
                close(n, first_tok);
                e = n;
            } else if (at_op("[")) {
                int first_tok = nodes_[e].first;
                take();
                int idx = parse_subscript_list();
                expect_op("]");
                int n = make(NodeKind::Subscript);
                nodes_[n].kids = {e, idx};
                close(n, first_tok);
                e = n;
            } else {
                break;
            }
        }
        return e;
    }

    int parse_call(int callee) {
        int first_tok = nodes_[callee].first;
        expect_op("(");
        int n = make(NodeKind::Call);
        nodes_[n].kids = {callee};
        while (!at_op(")")) {
            add_kid(n, parse_call_arg());
            if (at_op(","))
                take();
            else
                break;
        }
        expect_op(")");
        close(n, first_tok);
        return n;
    }

    int parse_call_arg() {
        if (at_op("*")) {
            int n = make(NodeKind::Star);
            int first = take();
            add_kid(n, parse_expr());
            close(n, first);
            return n;
        }
        if (at_op("**")) {
            int n = make(NodeKind::DoubleStar);
            int first = take();
            add_kid(n, parse_expr());
            close(n, first);
            return n;
        }
        int first_tok = cur_index();
        int e = parse_namedexpr();
        if (nodes_[e].kind == NodeKind::NameExpr && at_op("=")) {
            take();
            int v = parse_expr();
            int n = make(NodeKind::KeywordArg);
            nodes_[n].kids = {e, v};
            nodes_[n].head = nodes_[e].head;
            close(n, first_tok);
            return n;
        }
        if (at_kw("for") || (at_kw("async") && la(1).is_keyword("for"))) {
            int n = make(NodeKind::GenExp);
            nodes_[n].kids = {e};
            parse_comp_clauses(n);
            close(n, first_tok);
            return n;
        }
        return e;
    }

    int parse_subscript_list() {
        int first_tok = cur_index();
        std::vector<int> items = {parse_subscript_item()};
        while (at_op(",")) {
            take();
            if (at_op("]")) break;
            items.push_back(parse_subscript_item());
        }
        if (items.size() == 1) return items[0];
        int n = make(NodeKind::TupleLit);
        nodes_[n].kids = std::move(items);
        close(n, first_tok);
        return n;
    }

    int parse_subscript_item() {
        int first_tok = cur_index();
        int lower = -1;
        if (!at_op(":")) {
            lower = parse_namedexpr();
            if (!at_op(":")) return lower;
        }
        int n = make(NodeKind::Slice);
        if (lower >= 0) add_kid(n, lower);
        expect_op(":");
        if (!at_op("]") && !at_op(",") && !at_op(":"))
            add_kid(n, parse_expr());
        if (at_op(":")) {
            take();
            if (!at_op("]") && !at_op(",")) add_kid(n, parse_expr());
        }
        close(n, first_tok);
        return n;
    }

    void parse_comp_clauses(int owner) {
        while (true) {
            if (at_kw("async") && la(1).is_keyword("for")) take();
            if (at_kw("for")) {
                int c = make(NodeKind::CompFor);
                int first = take();
                add_kid(c, parse_target_list());
                expect_kw("in");
                add_kid(c, parse_or_test());
                close(c, first);
                add_kid(owner, c);
            } else if (at_kw("if")) {
                int c = make(NodeKind::CompIf);
                int first = take();
                add_kid(c, parse_or_test());
                close(c, first);
                add_kid(owner, c);
            } else {
                break;
            }
        }
    }

    // Assignment/loop targets: names, attributes, subscripts, stars, tuples.
    int parse_target() {
        if (at_op("*")) {
            int n = make(NodeKind::Star);
            int first = take();
            add_kid(n, parse_target());
            close(n, first);
            return n;
        }
        if (at_op("(") || at_op("[")) {
            bool paren = at_op("(");
            int first = take();
            int inner = parse_target_list();
            expect_op(paren ? ")" : "]");
            nodes_[inner].first = first;
            nodes_[inner].last = last_consumed_;
            return inner;
        }
        return parse_atom_trailers();
    }

    int parse_target_list() {
        int first_tok = cur_index();
        int e = parse_target();
        if (!at_op(",")) return e;
        std::vector<int> elems = {e};
        while (at_op(",")) {
            take();
            if (at_kw("in") || at_op("=") || at_line_end() || at_op(")") ||
                at_op("]") || at_op(":"))
                break;
            elems.push_back(parse_target());
        }
        int n = make(NodeKind::TupleLit);
        nodes_[n].kids = std::move(elems);
        close(n, first_tok);
        return n;
    }

    int parse_atom() {
        if (at_kind(TokenKind::Name)) {
            int n = make(NodeKind::NameExpr);
            nodes_[n].head = take();
            close(n, nodes_[n].head);
            return n;
        }
        if (at_kind(TokenKind::Number)) {
            int n = make(NodeKind::NumberLit);
            int first = take();
            close(n, first);
            return n;
        }
        if (at_kind(TokenKind::String)) {
            int n = make(NodeKind::StringLit);
            int first = take();
            if (has_fstring_prefix(toks_[first].lexeme)) nodes_[n].flags |= kFlagFString;
            while (at_kind(TokenKind::String)) {
                int t = take();
                if (has_fstring_prefix(toks_[t].lexeme)) nodes_[n].flags |= kFlagFString;
            }
            close(n, first);
            return n;
        }
        if (at_kw("True") || at_kw("False") || at_kw("None")) {
            int n = make(NodeKind::ConstLit);
            int first = take();
            close(n, first);
            return n;
        }
        if (at_op("...")) {
            int n = make(NodeKind::ConstLit);
            int first = take();
            close(n, first);
            return n;
        }
        if (at_kw("lambda")) return parse_lambda();
        if (at_kw("yield")) return parse_yield();
        if (at_op("(")) return parse_paren_atom();
        if (at_op("[")) return parse_bracket_atom();
        if (at_op("{")) return parse_brace_atom();
        throw err("expected expression");
    }

    static bool has_fstring_prefix(const std::string& lexeme) {
        for (char c : lexeme) {
            if (c == '\'' || c == '"') return false;
            if (c == 'f' || c == 'F') return true;
        }
        return false;
    }

    int parse_paren_atom() {
        int first = expect_op("(");
        if (at_op(")")) {
            take();
            int n = make(NodeKind::TupleLit);
            close(n, first);
            return n;
        }
        int e = parse_star_or_maybe_yield();
        if (at_kw("for") || (at_kw("async") && la(1).is_keyword("for"))) {
            int n = make(NodeKind::GenExp);
            nodes_[n].kids = {e};
            parse_comp_clauses(n);
            expect_op(")");
            close(n, first);
            return n;
        }
        if (at_op(",")) {
            std::vector<int> elems = {e};
            while (at_op(",")) {
                take();
                if (at_op(")")) break;
                elems.push_back(parse_star_or_expr());
            }
            expect_op(")");
            int n = make(NodeKind::TupleLit);
            nodes_[n].kids = std::move(elems);
            close(n, first);
            return n;
        }
        expect_op(")");
        // Parenthesized expression: widen the node's span to the brackets.
        nodes_[e].first = std::min(nodes_[e].first, first);
        nodes_[e].last = std::max(nodes_[e].last, last_consumed_);
        return e;
    }

    int parse_star_or_maybe_yield() {
        if (at_kw("yield")) return parse_yield();
        if (at_op("*")) return parse_star_or_expr();
        return parse_namedexpr();
    }

    int parse_bracket_atom() {
        int first = expect_op("[");
        if (at_op("]")) {
            take();
            int n = make(NodeKind::ListLit);
            close(n, first);
            return n;
        }
        int e = parse_star_or_expr();
        if (at_kw("for") || (at_kw("async") && la(1).is_keyword("for"))) {
            int n = make(NodeKind::ListComp);
            nodes_[n].kids = {e};
            parse_comp_clauses(n);
            expect_op("]");
            close(n, first);
            return n;
        }
        std::vector<int> elems = {e};
        while (at_op(",")) {
            take();
            if (at_op("]")) break;
            elems.push_back(parse_star_or_expr());
        }
        expect_op("]");
        int n = make(NodeKind::ListLit);
        nodes_[n].kids = std::move(elems);
        close(n, first);
        return n;
    }

    int parse_brace_atom() {
        int first = expect_op("{");
        if (at_op("}")) {
            take();
            int n = make(NodeKind::DictLit);
            close(n, first);
            return n;
        }
        if (at_op("**")) {
            int n = make(NodeKind::DictLit);
            parse_dict_entries(n);
            expect_op("}");
            close(n, first);
            return n;
        }
        int e = parse_star_or_expr();
        if (at_op(":")) {
            take();
            int v = parse_expr();
            int kv = make(NodeKind::KeyValue);
            nodes_[kv].kids = {e, v};
            close(kv, nodes_[e].first);
            if (at_kw("for") || (at_kw("async") && la(1).is_keyword("for"))) {
                int n = make(NodeKind::DictComp);
                nodes_[n].kids = {kv};
                parse_comp_clauses(n);
                expect_op("}");
                close(n, first);
                return n;
            }
            int n = make(NodeKind::DictLit);
            nodes_[n].kids = {kv};
            if (at_op(",")) {
                take();
                parse_dict_entries(n);
            }
            expect_op("}");
            close(n, first);
            return n;
        }
        if (at_kw("for") || (at_kw("async") && la(1).is_keyword("for"))) {
            int n = make(NodeKind::SetComp);
            nodes_[n].kids = {e};
            parse_comp_clauses(n);
            expect_op("}");
            close(n, first);
            return n;
        }
        int n = make(NodeKind::SetLit);
        nodes_[n].kids = {e};
        while (at_op(",")) {
            take();
            if (at_op("}")) break;
            add_kid(n, parse_star_or_expr());
        }
        expect_op("}");
        close(n, first);
        return n;
    }

    void parse_dict_entries(int dict) {
        while (!at_op("}")) {
            if (at_op("**")) {
                int n = make(NodeKind::DoubleStar);
                int first = take();
                add_kid(n, parse_expr());
                close(n, first);
                add_kid(dict, n);
            } else {
                int k = parse_expr();
                expect_op(":");
                int v = parse_expr();
                int kv = make(NodeKind::KeyValue);
                nodes_[kv].kids = {k, v};
                close(kv, nodes_[k].first);
                add_kid(dict, kv);
            }
            if (at_op(","))
                take();
            else
                break;
        }
    }
};

}  // namespace

namespace detail {

// Entry point used by source_unit.cpp.
int run_parser(const std::vector<Token>& tokens, std::vector<Node>& nodes) {
    return Parser(tokens, nodes).parse_module();
}

}  // namespace detail

}  // namespace stylediff
