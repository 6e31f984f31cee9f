#pragma once

#include <stdexcept>
#include <string>

namespace sokoarch {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class DimensionUnsupported : public Error {
public:
    using Error::Error;
};

class ReferenceViolation : public Error {
public:
    using Error::Error;
};

class EmptyArchive : public Error {
public:
    using Error::Error;
};

class InitializationExhausted : public Error {
public:
    using Error::Error;
};

class InvalidGenome : public Error {
public:
    using Error::Error;
};

class Unrepairable : public Error {
public:
    using Error::Error;
};

class SpecMismatch : public Error {
public:
    using Error::Error;
};

class MoveStringInvalid : public Error {
public:
    MoveStringInvalid(std::string message, std::size_t position)
        : Error(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Malformed level text. Row and column are zero-based; -1 when the problem
/// is not tied to a single cell (e.g. a missing player).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int row, int col)
        : Error(format(what, row, col)), row_(row), col_(col) {}

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    static std::string format(const std::string& what, int row, int col) {
        if (row < 0) return "parse error: " + what;
        std::string loc = "row " + std::to_string(row);
        if (col >= 0) loc += ", column " + std::to_string(col);
        return "parse error at " + loc + ": " + what;
    }
    int row_;
    int col_;
};

class MissingArtifacts : public Error {
public:
    using Error::Error;
};

}  // namespace sokoarch
