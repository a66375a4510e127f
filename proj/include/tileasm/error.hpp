#pragma once

#include <stdexcept>
#include <string>

namespace tileasm {

enum class ErrorKind {
    EmptyWord,
    InvalidDirection,
    ZeroPeriodDisplacement,
    ZeroVector,
    DegenerateRibbon,
    PathReentersWindow,
    PointOutsideWindow,
    StartOutsideIntersection,
    MismatchedStart,
    SimplicityViolation,
    DuplicateTileName,
    DuplicateSeed,
    MissingSeed,
    SyntaxError,
    SiteOccupied,
    SiteOutsideWindow,
    WindowExceeded,
    NonCausalViolation,
    GlueMismatch,
    WidthMismatch,
    ValuationMismatch,
    StartUnoccupied,
    PathIntersectsForbidden,
    NotConfluent,
    InvalidArgument,
    InvariantViolation,
};

const char* error_kind_name(ErrorKind k);

// Every library failure is reported through this one type; `kind` is the
// machine-readable part, line/column are set only for parse errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

}  // namespace tileasm
