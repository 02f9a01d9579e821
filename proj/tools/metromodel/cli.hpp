// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metro::cli {

enum ExitCode : int {
  kOk = 0,
  kErrors = 1,        // error-severity diagnostics or a failed analysis
  kStrictWarnings = 2,
  kUsage = 3,         // usage, IO or parse failure
};

// Entry point behind the metromodel binary. Results go to `out`; usage text
// and errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metro::cli
