#pragma once

#include <string_view>
#include <vector>

#include "stylediff/token.hpp"

namespace stylediff {

/// Tokenize analyzed-language source into a lossless token stream.
///
/// Input must be valid UTF-8; anything else raises ParseError. The stream
/// always ends with an EndMarker token whose trivia holds any trailing
/// whitespace, and pending Dedents are emitted before it.
std::vector<Token> tokenize(std::string_view text);

/// True iff `text` is well-formed UTF-8.
bool is_valid_utf8(std::string_view text);

}  // namespace stylediff
