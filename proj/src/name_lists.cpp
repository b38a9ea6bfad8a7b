#include "stylediff/name_lists.hpp"

#include <unordered_set>

namespace stylediff {

// Name lists version "python-names-v1" (see DetectorConfig).

namespace {

const std::unordered_set<std::string>& builtin_functions() {
    static const std::unordered_set<std::string> s = {
        "abs",       "all",       "any",      "ascii",    "bin",       "bool",
        "bytearray", "bytes",     "callable", "chr",      "classmethod",
        "compile",   "complex",   "delattr",  "dict",     "dir",       "divmod",
        "enumerate", "eval",      "exec",     "filter",   "float",     "format",
        "frozenset", "getattr",   "globals",  "hasattr",  "hash",      "help",
        "hex",       "id",        "input",    "int",      "isinstance",
        "issubclass", "iter",     "len",      "list",     "locals",    "map",
        "max",       "memoryview", "min",     "next",     "object",    "oct",
        "open",      "ord",       "pow",      "print",    "property",  "range",
        "repr",      "reversed",  "round",    "set",      "setattr",   "slice",
        "sorted",    "staticmethod", "str",   "sum",      "super",     "tuple",
        "type",      "vars",      "zip",
    };
    return s;
}

const std::unordered_set<std::string>& builtin_methods() {
    static const std::unordered_set<std::string> s = {
        // str
        "capitalize", "casefold", "center", "count", "encode", "endswith",
        "expandtabs", "find", "format", "format_map", "index", "isalnum",
        "isalpha", "isascii", "isdecimal", "isdigit", "isidentifier",
        "islower", "isnumeric", "isprintable", "isspace", "istitle",
        "isupper", "join", "ljust", "lower", "lstrip", "maketrans",
        "partition", "removeprefix", "removesuffix", "replace", "rfind",
        "rindex", "rjust", "rpartition", "rsplit", "rstrip", "split",
        "splitlines", "startswith", "strip", "swapcase", "title",
        "translate", "upper", "zfill",
        // list
        "append", "clear", "copy", "extend", "insert", "pop", "remove",
        "reverse", "sort",
        // dict
        "fromkeys", "get", "items", "keys", "popitem", "setdefault",
        "update", "values",
        // set
        "add", "difference", "difference_update", "discard", "intersection",
        "intersection_update", "isdisjoint", "issubset", "issuperset",
        "symmetric_difference", "symmetric_difference_update", "union",
        // bytes / misc
        "decode", "hexdigest", "readline", "readlines", "read", "write",
        "writelines", "close", "seek", "tell", "flush",
    };
    return s;
}

const std::unordered_set<std::string>& stdlib_modules() {
    static const std::unordered_set<std::string> s = {
        "abc",        "argparse",  "array",    "ast",       "asyncio",
        "base64",     "bisect",    "calendar", "collections", "configparser",
        "contextlib", "copy",      "csv",      "ctypes",    "datetime",
        "decimal",    "difflib",   "enum",     "errno",     "fnmatch",
        "functools",  "glob",      "gzip",     "hashlib",   "heapq",
        "hmac",       "html",      "http",     "importlib", "inspect",
        "io",         "itertools", "json",     "logging",   "math",
        "mimetypes",  "multiprocessing", "operator", "os",  "pathlib",
        "pickle",     "platform",  "pprint",   "queue",     "random",
        "re",         "secrets",   "select",   "shlex",     "shutil",
        "signal",     "socket",    "sqlite3",  "stat",      "statistics",
        "string",     "struct",    "subprocess", "sys",     "tempfile",
        "textwrap",   "threading", "time",     "traceback", "types",
        "typing",     "unicodedata", "urllib", "uuid",      "warnings",
        "weakref",    "xml",       "zipfile",  "zlib",
    };
    return s;
}

}  // namespace

bool is_builtin_function(const std::string& name) {
    return builtin_functions().count(name) > 0;
}

bool is_builtin_method(const std::string& name) {
    return builtin_methods().count(name) > 0;
}

bool is_stdlib_module(const std::string& name) {
    return stdlib_modules().count(name) > 0;
}

bool is_builtin_exception(const std::string& name) {
    static const std::unordered_set<std::string> s = {
        "ArithmeticError", "AssertionError", "AttributeError", "BaseException",
        "Exception", "FileNotFoundError", "IOError", "IndexError", "KeyError",
        "LookupError", "NameError", "NotImplementedError", "OSError",
        "OverflowError", "PermissionError", "RuntimeError", "StopIteration",
        "TimeoutError", "TypeError", "UnicodeError", "ValueError",
        "ZeroDivisionError",
    };
    return s.count(name) > 0;
}

bool is_logging_name(const std::string& name) {
    return name == "logging" || name == "logger" || name == "log" || name == "LOG" ||
           name == "LOGGER";
}

const char* api_source_name(ApiSource source) {
    switch (source) {
        case ApiSource::RepoDefined: return "repo-defined";
        case ApiSource::Builtin: return "built-in";
        case ApiSource::StandardLibrary: return "standard-library";
        case ApiSource::ThirdParty: return "third-party";
        case ApiSource::SelfImplemented: return "self-implemented";
    }
    return "?";
}

}  // namespace stylediff
