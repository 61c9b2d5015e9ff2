#pragma once

#include <span>
#include <string>
#include <string_view>

#include "moddef/io.hpp"

namespace moddef {

/// Exit codes shared by the CLI and the Python module.
enum ExitCode : int {
    kAffirmative = 0,  // valid, cocycle, extended, integrated, rigid-certified, equivalent
    kNegative = 1,     // computed with a negative verdict and its certificate
    kError = 2,        // input or resource error
};

struct CommandResult {
    Json document;
    int exit_code = kError;
};

/// validate, cohomology, cocycle, coboundary, obstruction, extend, integrate,
/// normalize, conjugate, equiv-step, rigidity
std::span<const std::string_view> command_names();

/// Runs one command. Errors propagate as InputError / ResourceError.
CommandResult run(std::string_view command, const Problem& problem);

/// Parses `text` and runs the command, turning errors into an exit-2
/// document of the form {"command": ..., "error": {"kind", "path", "message"}}.
CommandResult run_document(std::string_view command, std::string_view text, const Overrides& overrides = {});

}  // namespace moddef
