#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stylediff/token.hpp"

namespace stylediff {

enum class NodeKind : uint8_t {
    Module,
    FuncDef,
    ParamList,
    Param,
    ClassDef,
    Block,
    Decorator,
    // statements
    ExprStmt,
    Assign,
    AugAssign,
    AnnAssign,
    Return,
    Raise,
    Pass,
    Break,
    Continue,
    If,
    For,
    While,
    Try,
    Except,
    With,
    WithItem,
    Import,
    ImportFrom,
    Global,
    Del,
    Assert,
    Opaque,  // unrecognized construct, consumed as a raw logical line (+ block)
    // expressions
    NameExpr,
    NumberLit,
    StringLit,
    ConstLit,  // True / False / None
    TupleLit,
    ListLit,
    DictLit,
    SetLit,
    ListComp,
    SetComp,
    DictComp,
    GenExp,
    CompFor,
    CompIf,
    Call,
    KeywordArg,
    Attribute,
    Subscript,
    Slice,
    Compare,
    BoolOp,
    UnaryOp,
    BinOp,
    IfExp,
    Lambda,
    Star,
    DoubleStar,
    Yield,
    Await,
    KeyValue,
    CommentNode,
};

const char* node_kind_name(NodeKind kind);

// Node flag bits.
inline constexpr uint32_t kFlagElif = 1u << 0;      // If that continues an elif chain
inline constexpr uint32_t kFlagHasElse = 1u << 1;   // for/while/try else clause present
inline constexpr uint32_t kFlagHasFinally = 1u << 2;
inline constexpr uint32_t kFlagAsync = 1u << 3;
inline constexpr uint32_t kFlagDocstring = 1u << 4;  // ExprStmt that is a docstring
inline constexpr uint32_t kFlagBoolOr = 1u << 5;     // BoolOp is `or` (else `and`)
inline constexpr uint32_t kFlagFString = 1u << 6;    // StringLit with an f prefix
inline constexpr uint32_t kFlagYieldFrom = 1u << 7;

/// One concrete-syntax-tree node. Nodes live in a flat arena owned by the
/// SourceUnit; `kids` holds arena indices. `first`/`last` are inclusive
/// indices into the unit's token stream, so every node spans a contiguous
/// token range and child ranges nest within parent ranges.
struct Node {
    NodeKind kind;
    int first = -1;
    int last = -1;
    std::vector<int> kids;
    uint32_t flags = 0;
    // For compound statements, the token index of the ':' that closes the
    // header; for Name/Attribute, the index of the identifier token.
    int head = -1;
};

}  // namespace stylediff
