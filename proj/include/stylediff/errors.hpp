#pragma once

#include <stdexcept>
#include <string>

namespace stylediff {

/// Source text could not be tokenized or parsed. Carries the 1-based line
/// and 0-based column of the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// The source parsed but contains no function definition.
class NoFunctionError : public std::runtime_error {
public:
    explicit NoFunctionError(std::string message)
        : std::runtime_error(std::move(message)) {}
};

/// A corpus record is missing a field, has a mistyped field, or carries an
/// unknown field. Carries the 1-based line number of the record.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string message, int line)
        : std::runtime_error(std::move(message)), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Taxonomy lookup with an id outside 1..24.
class UnknownTypeError : public std::out_of_range {
public:
    explicit UnknownTypeError(int id)
        : std::out_of_range("unknown inconsistency type id " + std::to_string(id)) {}
};

class EmptyInputError : public std::invalid_argument {
public:
    explicit EmptyInputError(std::string message)
        : std::invalid_argument(std::move(message)) {}
};

/// A contingency table with an all-zero row or column.
class DegenerateTableError : public std::invalid_argument {
public:
    explicit DegenerateTableError(std::string message)
        : std::invalid_argument(std::move(message)) {}
};

}  // namespace stylediff
