#pragma once

#include <stdexcept>
#include <string>

namespace bab {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph file; carries the 1-based line number of the offense.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An instance exceeded a desk-scale guard (size limit or enumeration cap).
// The stage name is part of the message so callers can report which
// computation refused.
class GuardError : public Error {
public:
    GuardError(const std::string& stage, const std::string& message)
        : Error(stage + ": " + message), stage_(stage) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// Invalid domain input: bad certificate, bad decomposition, infeasible
// generator parameters, and the like.
class StructureError : public Error {
public:
    using Error::Error;
};

}  // namespace bab
