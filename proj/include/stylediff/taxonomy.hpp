#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stylediff {

enum class Dimension : uint8_t {
    Formatting,
    Semantic,
    ExpressionStatement,
    ControlFlow,
    FaultTolerance,
};

/// Smallest syntactic region a single finding of a type can occupy,
/// ordered Identifier < Statement < Block < MultiBlock.
enum class Scope : uint8_t {
    Identifier,
    Statement,
    Block,
    MultiBlock,
};

const char* dimension_name(Dimension d);
const char* scope_name(Scope s);

struct InconsistencyType {
    int id;  // 1..24
    const char* name;
    const char* definition;
    Dimension dimension;
    Scope scope;
};

inline constexpr int kTypeCount = 24;

/// All 24 inconsistency types ordered by id.
const std::array<InconsistencyType, kTypeCount>& list_taxonomy();

/// Partition member for a type id. Throws UnknownTypeError outside 1..24.
Dimension dimension_of(int type_id);

/// Declared maximum scope for a type id. Throws UnknownTypeError.
Scope scope_of(int type_id);

const InconsistencyType& type_info(int type_id);

/// Type ids belonging to one dimension, ascending.
std::vector<int> types_in_dimension(Dimension d);

}  // namespace stylediff
