#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affcrit::cli {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitUnknownCommand = 64;
constexpr int kExitParse = 65;

// Runs one command line (without the program name). Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& subcommands();

}  // namespace affcrit::cli
