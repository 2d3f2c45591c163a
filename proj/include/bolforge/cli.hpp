#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bolforge/corpus.hpp"

namespace bolforge {

/// Process exit statuses used by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitInputError = 2,
  kExitBudget = 3,
  kExitNotFound = 4,
};

struct CliHooks {
  /// Replaces the claim checker used by `verify` (fault injection in tests).
  ClaimRunner claim_runner;
};

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace bolforge
