#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcmbin::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   // a verification or bound reported false, or attestation failed
    kUsageError = 2,    // bad flags, unknown subcommand, domain error
    kResourceError = 3, // a resource cap was hit
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Entry point. argv excludes the program name. Data goes to out, diagnostics
/// to err.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace lcmbin::cli
