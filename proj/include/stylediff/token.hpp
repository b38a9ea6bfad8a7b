#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stylediff {

enum class TokenKind : uint8_t {
    Name,
    Keyword,
    Number,
    String,
    Op,
    Comment,
    Newline,    // terminates a logical line
    Nl,         // non-logical newline: blank line, comment-only line, or inside brackets
    Indent,     // synthetic, empty lexeme
    Dedent,     // synthetic, empty lexeme
    EndMarker,  // synthetic, empty lexeme; carries trailing trivia
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;    // 1-based, position of the first lexeme byte
    int column = 0;  // 0-based byte column
    // Whitespace and backslash-continuations between the previous token and
    // this one. Concatenating trivia+lexeme over the whole stream
    // reproduces the input byte-for-byte.
    std::string trivia;

    bool is_keyword(const char* kw) const {
        return kind == TokenKind::Keyword && lexeme == kw;
    }
    bool is_op(const char* op) const { return kind == TokenKind::Op && lexeme == op; }
};

/// Reassemble the exact source text from a token stream.
std::string reassemble(const std::vector<Token>& tokens);

}  // namespace stylediff
