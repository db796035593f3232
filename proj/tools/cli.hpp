#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace markov::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kResource = 3 };

// One library operation and the invocation that reaches it.
struct OpBinding {
    std::string op;
    std::string subcommand;
    std::string action;                // empty when the subcommand has a single action
    std::vector<std::string> example;  // arguments after the program name
};

const std::vector<OpBinding>& op_registry();

// Runs one command line (args exclude the program name). Output goes to `out`
// unless --out names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markov::cli
