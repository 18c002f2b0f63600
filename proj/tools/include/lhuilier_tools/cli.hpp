#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhuilier::cli {

// Exit codes of run().
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Parses args (without the program name) and executes one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lhuilier::cli
