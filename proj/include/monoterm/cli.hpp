// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoterm::cli {

/// Process exit codes.
enum ExitCode : int {
    kTerminating = 0,
    kNonTerminating = 1,
    kUnsupported = 2,
    kInputError = 3,
    /// --oracle-check found a verdict contradicted by the concrete run.
    kOracleDisagreement = 4,
};

/// Runs `monoterm <args...>` (args excludes the program name). bench and gen
/// return 0 on success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monoterm::cli
