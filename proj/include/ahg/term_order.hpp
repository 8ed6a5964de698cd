#pragma once

#include <string>
#include <vector>

#include "ahg/expvec.hpp"

namespace ahg {

// Monomial order on exponent vectors, built from consecutive variable blocks.
// Each block is compared with its own rule (lex or graded reverse lex); the
// first block with a difference decides.  A multi-block order is therefore an
// elimination (product) order for its leading blocks, which is how auxiliary
// variables get eliminated in the toric computation.
class TermOrder {
 public:
  enum class Kind { Lex, Grevlex };
  struct Block {
    Kind kind;
    int size;
  };

  static TermOrder lex(int nvars);
  static TermOrder grevlex(int nvars);
  // Named order for CLI/problem files: "lex" or "grevlex".  Throws ParseError
  // on anything else.
  static TermOrder named(const std::string& name, int nvars);

  // Product order: the blocks of *this dominate, then the blocks of tail.
  TermOrder then(const TermOrder& tail) const;

  int nvars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // +1 when a > b, -1 when a < b, 0 when equal.  Both vectors must have
  // exactly nvars() entries.
  int compare(const ExpVec& a, const ExpVec& b) const;
  bool greater(const ExpVec& a, const ExpVec& b) const { return compare(a, b) > 0; }
  bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }

  // "lex" / "grevlex" for single-block orders, "block(...)" otherwise.
  std::string name() const;

 private:
  std::vector<Block> blocks_;
  int nvars_ = 0;
};

}  // namespace ahg
