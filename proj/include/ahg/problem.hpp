#ifndef AHG_PROBLEM_HPP
#define AHG_PROBLEM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ahg/config.hpp"
#include "ahg/expvec.hpp"
#include "ahg/hgm.hpp"
#include "ahg/rational.hpp"
#include "ahg/term_order.hpp"

namespace ahg {

// A fully validated problem description: the configuration matrix, a starting
// parameter, an evaluation point, a state basis, and a walk plan.  Fractions
// travel as strings in the file so nothing is ever rounded in transport.
struct Problem {
  ConfigMatrix A;
  std::vector<long> beta;
  std::vector<Rat> X;
  std::vector<ExpVec> S;
  std::vector<Leg> legs;
  TermOrder order = TermOrder::grevlex(0);
  std::vector<long> weights;  // empty = unweighted direction decomposition

  EvalPlan plan() const { return EvalPlan{beta, legs, X, S}; }
};

// Parse and validate a problem document (JSON).  Every failure throws
// ParseError with a message that names the offending field, e.g.
// "beta: expected 3 entries".
Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);

}  // namespace ahg

#endif
