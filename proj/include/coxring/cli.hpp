#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxring::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInputError = 2,
    kDisagreement = 3,
};

/// Runs one job. `args` excludes the program name, e.g. {"toric-cl", "--input", "fan.json"}.
/// Without --input the document is read from `in`; without --output it goes to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Subcommand names in help order.
const std::vector<std::string>& commands();

}  // namespace coxring::cli
