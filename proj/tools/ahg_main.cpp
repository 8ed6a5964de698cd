// Command-line driver: loads a problem file (JSON) and dispatches to one of
// the library commands.  Exit codes: 0 ok, 2 parse/validation error, 3 method
// mismatch, 4 semigroup membership failure, 5 singular/genericity failure.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahg/commands.hpp"
#include "ahg/errors.hpp"
#include "ahg/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of A-hypergeometric polynomials via contiguity recurrences"};
  app.require_subcommand(1);

  std::string problem_path;
  ahg::CliOptions opt;

  struct SubSpec {
    const char* name;
    const char* help;
  };
  const SubSpec specs[] = {
      {"toric", "print a Groebner basis of the toric ideal of A"},
      {"macaulay", "print the degree-T operator matrix as TSV"},
      {"recurrence", "print the step matrices over Q(k) for the walk plan"},
      {"eval", "evaluate the state vector at the end of the walk plan"},
      {"enumerate", "enumerate the fiber of beta and sum it directly"},
      {"path", "print a contiguity descent path from beta toward the origin"},
      {"bench", "time the recurrence walk against direct enumeration per shift"},
  };
  for (const SubSpec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("problem", problem_path, "problem file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("-T,--T", opt.T, "initial degree bound for the operator matrix")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--order", opt.order, "term order")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_option("--decimal-digits", opt.decimal_digits,
                    "significant digits in decimal renderings (default 6)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opt.threads, "worker threads for fiber enumeration")
        ->check(CLI::PositiveNumber);
    if (std::string(s.name) == "eval")
      sub->add_flag("--verify-oracle", opt.verify_oracle,
                    "cross-check the endpoint against direct enumeration");
    if (std::string(s.name) == "bench")
      sub->add_option("--k", opt.k_list, "comma-separated shifts (default 0,10,...,100)")
          ->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    ahg::Problem p = ahg::load_problem(problem_path);
    return ahg::run_command(name, p, opt, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ahg::exit_code_for(e);
  }
}
