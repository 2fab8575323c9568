#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctqw::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Entry point of the ctqw-clique tool. args excludes the program name.
/// Subcommands: generate | solve | experiment | verify | intensities.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace ctqw::cli
