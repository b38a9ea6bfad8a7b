#include "stylediff/lexer.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <string>
#include <unordered_set>

#include "stylediff/errors.hpp"

namespace stylediff {

namespace {

const std::unordered_set<std::string>& keyword_set() {
    static const std::unordered_set<std::string> kw = {
        "False", "None",   "True",   "and",    "as",     "assert", "async",
        "await", "break",  "class",  "continue", "def",  "del",    "elif",
        "else",  "except", "finally", "for",   "from",   "global", "if",
        "import", "in",    "is",     "lambda", "nonlocal", "not",  "or",
        "pass",  "raise",  "return", "try",    "while",  "with",   "yield",
    };
    return kw;
}

// Longest-match-first operator table.
constexpr std::array<const char*, 5> kOps3 = {"**=", "//=", ">>=", "<<=", "..."};
constexpr std::array<const char*, 19> kOps2 = {"**", "//", ">>", "<<", "<=", ">=",
                                               "==", "!=", "->", "+=", "-=", "*=",
                                               "/=", "%=", "&=", "|=", "^=", "@=",
                                               ":="};
constexpr const char* kOps1 = "+-*/%@&|^~<>()[]{},:.;=";

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool is_ident_cont(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}
bool is_string_prefix_char(char c) {
    switch (c) {
        case 'r': case 'R': case 'b': case 'B':
        case 'u': case 'U': case 'f': case 'F':
            return true;
        default:
            return false;
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        if (!is_valid_utf8(text_))
            throw ParseError("source is not valid UTF-8", line_, 0);
        indents_.push_back(0);
        while (true) {
            if (at_line_start_ && paren_depth_ == 0) {
                if (!handle_line_start()) break;
                continue;
            }
            if (pos_ >= text_.size()) break;
            if (!lex_in_line()) break;
        }
        finish();
        return std::move(tokens_);
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 0;
    std::vector<int> indents_;
    int paren_depth_ = 0;
    bool at_line_start_ = true;
    bool seen_token_on_logical_line_ = false;
    std::string trivia_;
    std::vector<Token> tokens_;

    char cur() const { return text_[pos_]; }
    char peek(size_t off = 1) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    bool at_newline() const { return pos_ < text_.size() && (cur() == '\n' || cur() == '\r'); }

    void advance(size_t n = 1) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    void emit(TokenKind kind, std::string lexeme, int line, int col) {
        Token t;
        t.kind = kind;
        t.lexeme = std::move(lexeme);
        t.line = line;
        t.column = col;
        t.trivia = std::move(trivia_);
        trivia_.clear();
        tokens_.push_back(std::move(t));
    }

    // Consume one physical line terminator and return its bytes.
    std::string take_newline() {
        std::string nl;
        if (cur() == '\r') {
            nl += '\r';
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '\n') {
                nl += '\n';
                ++pos_;
            }
        } else {
            nl += '\n';
            ++pos_;
        }
        ++line_;
        col_ = 0;
        return nl;
    }

    void take_inline_whitespace() {
        while (pos_ < text_.size() && (cur() == ' ' || cur() == '\t' || cur() == '\f')) {
            trivia_ += cur();
            advance();
        }
    }

    // Returns false at end of input.
    bool handle_line_start() {
        size_t ws_begin = pos_;
        int width = 0;
        while (pos_ < text_.size() && (cur() == ' ' || cur() == '\t' || cur() == '\f')) {
            if (cur() == '\t')
                width = (width / 8 + 1) * 8;
            else if (cur() == ' ')
                ++width;
            else
                width = 0;  // formfeed resets, as in the reference tokenizer
            advance();
        }
        std::string ws(text_.substr(ws_begin, pos_ - ws_begin));
        if (pos_ >= text_.size()) {
            trivia_ += ws;
            return false;
        }
        if (at_newline()) {  // blank line
            trivia_ += ws;
            int l = line_, c = col_;
            emit(TokenKind::Nl, take_newline(), l, c);
            return true;
        }
        if (cur() == '#') {  // comment-only line
            trivia_ += ws;
            lex_comment();
            if (pos_ >= text_.size()) return false;
            int l = line_, c = col_;
            emit(TokenKind::Nl, take_newline(), l, c);
            return true;
        }
        // A real code line: resolve indentation against the stack.
        if (width > indents_.back()) {
            indents_.push_back(width);
            emit(TokenKind::Indent, "", line_, 0);
        } else {
            while (width < indents_.back()) {
                indents_.pop_back();
                emit(TokenKind::Dedent, "", line_, 0);
            }
            if (width != indents_.back())
                throw ParseError("unindent does not match any outer indentation level",
                                 line_, col_);
        }
        trivia_ += ws;
        at_line_start_ = false;
        seen_token_on_logical_line_ = false;
        return true;
    }

    void lex_comment() {
        int l = line_, c = col_;
        size_t begin = pos_;
        while (pos_ < text_.size() && !at_newline()) advance();
        emit(TokenKind::Comment, std::string(text_.substr(begin, pos_ - begin)), l, c);
    }

    bool lex_in_line() {
        take_inline_whitespace();
        if (pos_ >= text_.size()) return false;
        char c = cur();

        if (c == '\\' && (peek() == '\n' || peek() == '\r')) {
            trivia_ += '\\';
            ++pos_;
            trivia_ += take_newline();
            return true;
        }
        if (at_newline()) {
            int l = line_, co = col_;
            std::string nl = take_newline();
            if (paren_depth_ > 0) {
                emit(TokenKind::Nl, std::move(nl), l, co);
            } else if (seen_token_on_logical_line_) {
                emit(TokenKind::Newline, std::move(nl), l, co);
                at_line_start_ = true;
                seen_token_on_logical_line_ = false;
            } else {
                emit(TokenKind::Nl, std::move(nl), l, co);
                at_line_start_ = true;
            }
            return true;
        }
        if (c == '#') {
            lex_comment();
            return true;
        }
        if (is_string_start()) {
            lex_string();
            seen_token_on_logical_line_ = true;
            return true;
        }
        if (is_ident_start(static_cast<unsigned char>(c))) {
            lex_name();
            seen_token_on_logical_line_ = true;
            return true;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek())))) {
            lex_number();
            seen_token_on_logical_line_ = true;
            return true;
        }
        if (lex_operator()) {
            seen_token_on_logical_line_ = true;
            return true;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    bool is_string_start() const {
        size_t p = pos_;
        int prefix = 0;
        while (p < text_.size() && prefix < 2 && is_string_prefix_char(text_[p])) {
            ++p;
            ++prefix;
        }
        return p < text_.size() && (text_[p] == '\'' || text_[p] == '"');
    }

    void lex_string() {
        int l = line_, c = col_;
        size_t begin = pos_;
        while (is_string_prefix_char(cur())) advance();
        char quote = cur();
        advance();
        bool triple = false;
        if (pos_ + 1 < text_.size() && text_[pos_] == quote && text_[pos_ + 1] == quote) {
            triple = true;
            advance(2);
        } else if (pos_ < text_.size() && text_[pos_] == quote) {
            // empty string
            advance();
            emit(TokenKind::String, std::string(text_.substr(begin, pos_ - begin)), l, c);
            return;
        }
        while (pos_ < text_.size()) {
            char ch = cur();
            if (ch == '\\') {
                ++pos_;
                ++col_;
                if (pos_ < text_.size()) {
                    if (text_[pos_] == '\n' || text_[pos_] == '\r')
                        take_newline();
                    else
                        advance();
                }
                continue;
            }
            if (!triple && (ch == '\n' || ch == '\r'))
                throw ParseError("unterminated string literal", l, c);
            if (ch == '\n' || ch == '\r') {
                take_newline();
                continue;
            }
            if (ch == quote) {
                if (!triple) {
                    advance();
                    emit(TokenKind::String, std::string(text_.substr(begin, pos_ - begin)),
                         l, c);
                    return;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    advance(3);
                    emit(TokenKind::String, std::string(text_.substr(begin, pos_ - begin)),
                         l, c);
                    return;
                }
                advance();
                continue;
            }
            advance();
        }
        throw ParseError("unterminated string literal", l, c);
    }

    void lex_name() {
        int l = line_, c = col_;
        size_t begin = pos_;
        while (pos_ < text_.size() && is_ident_cont(static_cast<unsigned char>(cur())))
            advance();
        std::string lex(text_.substr(begin, pos_ - begin));
        TokenKind kind =
            keyword_set().count(lex) ? TokenKind::Keyword : TokenKind::Name;
        emit(kind, std::move(lex), l, c);
    }

    void lex_number() {
        int l = line_, c = col_;
        size_t begin = pos_;
        auto digits = [&](auto pred) {
            while (pos_ < text_.size() &&
                   (pred(static_cast<unsigned char>(cur())) || cur() == '_'))
                advance();
        };
        if (cur() == '0' && (peek() == 'x' || peek() == 'X')) {
            advance(2);
            digits([](unsigned char ch) { return std::isxdigit(ch); });
        } else if (cur() == '0' && (peek() == 'o' || peek() == 'O' || peek() == 'b' ||
                                    peek() == 'B')) {
            advance(2);
            digits([](unsigned char ch) { return std::isdigit(ch); });
        } else {
            digits([](unsigned char ch) { return std::isdigit(ch); });
            if (pos_ < text_.size() && cur() == '.' &&
                !(peek() == '.')) {  // not the start of "..."
                advance();
                digits([](unsigned char ch) { return std::isdigit(ch); });
            }
            if (pos_ < text_.size() && (cur() == 'e' || cur() == 'E') &&
                (std::isdigit(static_cast<unsigned char>(peek())) ||
                 ((peek() == '+' || peek() == '-') &&
                  std::isdigit(static_cast<unsigned char>(peek(2)))))) {
                advance();
                if (cur() == '+' || cur() == '-') advance();
                digits([](unsigned char ch) { return std::isdigit(ch); });
            }
        }
        if (pos_ < text_.size() && (cur() == 'j' || cur() == 'J')) advance();
        emit(TokenKind::Number, std::string(text_.substr(begin, pos_ - begin)), l, c);
    }

    bool lex_operator() {
        auto try_match = [&](const char* op) {
            size_t len = std::strlen(op);
            if (text_.substr(pos_).starts_with(op)) {
                int l = line_, c = col_;
                advance(len);
                emit(TokenKind::Op, op, l, c);
                return true;
            }
            return false;
        };
        for (const char* op : kOps3)
            if (try_match(op)) return true;
        for (const char* op : kOps2)
            if (try_match(op)) return true;
        char c = cur();
        if (std::strchr(kOps1, c)) {
            if (c == '(' || c == '[' || c == '{') ++paren_depth_;
            if (c == ')' || c == ']' || c == '}') {
                if (paren_depth_ == 0)
                    throw ParseError("unmatched closing bracket", line_, col_);
                --paren_depth_;
            }
            int l = line_, co = col_;
            advance();
            emit(TokenKind::Op, std::string(1, c), l, co);
            return true;
        }
        return false;
    }

    void finish() {
        if (paren_depth_ > 0)
            throw ParseError("unexpected end of file inside brackets", line_, col_);
        if (seen_token_on_logical_line_)
            emit(TokenKind::Newline, "", line_, col_);
        while (indents_.back() > 0) {
            indents_.pop_back();
            emit(TokenKind::Dedent, "", line_, 0);
        }
        emit(TokenKind::EndMarker, "", line_, col_);
    }
};

}  // namespace

bool is_valid_utf8(std::string_view text) {
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        size_t extra;
        if (c < 0x80) {
            i += 1;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            if (c < 0xC2) return false;  // overlong
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            if (c > 0xF4) return false;
        } else {
            return false;
        }
        if (i + extra >= text.size()) return false;
        for (size_t k = 1; k <= extra; ++k)
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) return false;
        i += extra + 1;
    }
    return true;
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Name: return "name";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Number: return "number";
        case TokenKind::String: return "string";
        case TokenKind::Op: return "op";
        case TokenKind::Comment: return "comment";
        case TokenKind::Newline: return "newline";
        case TokenKind::Nl: return "nl";
        case TokenKind::Indent: return "indent";
        case TokenKind::Dedent: return "dedent";
        case TokenKind::EndMarker: return "endmarker";
    }
    return "?";
}

std::string reassemble(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        out += t.trivia;
        out += t.lexeme;
    }
    return out;
}

}  // namespace stylediff
