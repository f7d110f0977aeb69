#pragma once

#include <stdexcept>
#include <string>

namespace kingsim {

/// Bad argument or violated precondition; the CLI maps this to exit code 2.
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A state the underlying lemmas rule out. Thrown so tests can surface the
/// exact contradiction instead of silently producing a wrong answer.
class InternalContradictionError : public std::logic_error {
public:
    explicit InternalContradictionError(const std::string& what)
        : std::logic_error(what) {}
};

/// File-level failure; the CLI maps this to exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kingsim
