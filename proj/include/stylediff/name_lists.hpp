#pragma once

#include <string>

namespace stylediff {

/// Classification source for a callable (type 13).
enum class ApiSource : uint8_t {
    RepoDefined,
    Builtin,
    StandardLibrary,
    ThirdParty,
    SelfImplemented,
};

const char* api_source_name(ApiSource source);

/// Built-in callables of the analyzed language (len, range, ...).
bool is_builtin_function(const std::string& name);

/// Method names of built-in types (startswith, append, join, ...), used to
/// classify attribute calls whose receiver type is unknown.
bool is_builtin_method(const std::string& name);

/// Top-level standard-library module names (os, re, json, ...).
bool is_stdlib_module(const std::string& name);

/// Built-in exception class names (ValueError, KeyError, ...). Their
/// constructor calls are control flow, not API preference.
bool is_builtin_exception(const std::string& name);

/// Names that indicate a logging call when used as receiver or callee.
bool is_logging_name(const std::string& name);

}  // namespace stylediff
