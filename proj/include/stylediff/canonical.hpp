#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stylediff {

/// Normalized text used as the sample-identity key for corpus dedup:
/// line endings become LF, trailing whitespace per line is stripped,
/// trailing blank lines are removed, and nonempty text ends with one LF.
/// Idempotent.
std::string canonicalize(std::string_view text);

/// FNV-1a 64-bit digest, hex-encoded. Stable across platforms and runs.
std::string fnv1a_hex(std::string_view data);

}  // namespace stylediff
