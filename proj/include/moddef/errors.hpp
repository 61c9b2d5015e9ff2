#pragma once

#include <stdexcept>
#include <string>

namespace moddef {

/// Malformed or inconsistent input: bad shapes, failed axioms, syntax errors.
/// `path()` locates the offending item inside a document when known
/// (e.g. `algebra.structure[1][1]`), and is empty otherwise.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& message, std::string path = {})
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          message_(message),
          path_(std::move(path)) {}

    const std::string& message() const noexcept { return message_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string message_;
    std::string path_;
};

/// A computation would exceed a configured guardrail.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace moddef
