#ifndef AHG_COMMANDS_HPP
#define AHG_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ahg/problem.hpp"

namespace ahg {

// Command-line switches shared by the subcommands.
struct CliOptions {
  int T = -1;                // --T: initial truncation degree (-1 = default)
  std::string order;         // --order: overrides the problem file's order
  bool verify_oracle = false;
  int decimal_digits = 6;    // significant digits of the decimal echo
  int threads = 1;           // reserved; this build is single-threaded
  std::vector<long> k_list;  // bench shifts; empty = 0,10,...,100
};

// Each command writes its report to `out` and returns the process exit code
// (0 on success).  Library failures are thrown; run_command maps them to the
// documented exit codes.
int cmd_toric(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_macaulay(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_recurrence(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_eval(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_enumerate(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_path(const Problem& p, const CliOptions& opt, std::ostream& out);
int cmd_bench(const Problem& p, const CliOptions& opt, std::ostream& out);

// Dispatch by subcommand name with the documented exit-code mapping:
// 0 ok, 2 parse/validation, 3 method mismatch, 4 semigroup membership,
// 5 singular/genericity failure.  Error text goes to `err`.
int run_command(const std::string& name, const Problem& p, const CliOptions& opt,
                std::ostream& out, std::ostream& err);

// Exit code for an already-caught error (shared with main's load path).
int exit_code_for(const std::exception& e);

}  // namespace ahg

#endif
