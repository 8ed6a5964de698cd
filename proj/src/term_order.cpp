#include "ahg/term_order.hpp"

#include "ahg/errors.hpp"

namespace ahg {

TermOrder TermOrder::lex(int nvars) {
  TermOrder o;
  if (nvars > 0) o.blocks_.push_back({Kind::Lex, nvars});
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::grevlex(int nvars) {
  TermOrder o;
  if (nvars > 0) o.blocks_.push_back({Kind::Grevlex, nvars});
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::named(const std::string& name, int nvars) {
  if (name == "lex") return lex(nvars);
  if (name == "grevlex") return grevlex(nvars);
  throw ParseError("unknown term order \"" + name + "\" (expected lex or grevlex)");
}

TermOrder TermOrder::then(const TermOrder& tail) const {
  TermOrder o;
  o.blocks_ = blocks_;
  o.blocks_.insert(o.blocks_.end(), tail.blocks_.begin(), tail.blocks_.end());
  o.nvars_ = nvars_ + tail.nvars_;
  return o;
}

int TermOrder::compare(const ExpVec& a, const ExpVec& b) const {
  int lo = 0;
  for (const Block& blk : blocks_) {
    const int hi = lo + blk.size;
    if (blk.kind == Kind::Lex) {
      for (int i = lo; i < hi; ++i) {
        const int d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
        if (d != 0) return d > 0 ? 1 : -1;
      }
    } else {  // Grevlex: higher block degree wins; tie broken by the last
              // variable with a difference, smaller exponent winning.
      long da = 0, db = 0;
      for (int i = lo; i < hi; ++i) {
        da += a[static_cast<std::size_t>(i)];
        db += b[static_cast<std::size_t>(i)];
      }
      if (da != db) return da > db ? 1 : -1;
      for (int i = hi - 1; i >= lo; --i) {
        const int d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
        if (d != 0) return d < 0 ? 1 : -1;
      }
    }
    lo = hi;
  }
  return 0;
}

std::string TermOrder::name() const {
  if (blocks_.size() == 1)
    return blocks_[0].kind == Kind::Lex ? "lex" : "grevlex";
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += blocks_[i].kind == Kind::Lex ? "lex:" : "grevlex:";
    s += std::to_string(blocks_[i].size);
  }
  s += ")";
  return s;
}

}  // namespace ahg
