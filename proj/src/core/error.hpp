#pragma once

#include <stdexcept>
#include <string>

namespace deltaric {

enum class ErrorKind {
    Domain,      // argument outside an operation's mathematical domain
    Structure,   // dimension or shape mismatch
    Constraint,  // generator input violates a construction constraint
    Parse,       // malformed input document
    Invariant,   // well-formed data violating a type invariant
    Io,          // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace deltaric
