#pragma once

#include <stdexcept>
#include <string>

namespace repat {

/// Source position, 1-based. line == 0 means "no location".
struct SourceLoc {
    std::string file;
    int line = 0;
    int column = 0;

    std::string str() const {
        if (line == 0) return file.empty() ? "<unknown>" : file;
        return file + ":" + std::to_string(line) + ":" + std::to_string(column);
    }
};

enum class ErrorKind {
    SyntaxError,
    NameResolutionError,
    WellFormednessError,
    StepBudgetExceeded,
    DynamicDispatchFailure,
    EvalError,
    UnknownPredicate,
    ArityMismatch,
    UnknownSpelling,
    NonLinearPatternUnsupported,
    PreconditionFailed,
    NoSuchInvocation,
    AmbiguousReuseValue,
    ResolutionChanged,
    ScriptParseError,
    ConfigInvalid,
    NotSupported,
    IoError,
};

const char* errorKindName(ErrorKind k);

/// Every failure in the engine is thrown as an Error; the CLI maps kinds
/// onto exit codes (2 for syntax/config, 1 for domain failures).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, SourceLoc loc = {})
        : std::runtime_error(std::string(errorKindName(kind)) + ": " + message +
                             (loc.line ? " at " + loc.str() : "")),
          kind_(kind), message_(std::move(message)), loc_(std::move(loc)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }
    const SourceLoc& loc() const { return loc_; }

private:
    ErrorKind kind_;
    std::string message_;
    SourceLoc loc_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, SourceLoc loc = {}) {
    throw Error(kind, msg, std::move(loc));
}

} // namespace repat
