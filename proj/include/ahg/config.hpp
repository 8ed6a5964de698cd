#pragma once

#include <vector>

#include "ahg/expvec.hpp"

namespace ahg {

// Integer d x n matrix whose columns a_1..a_n are the exponent directions of
// the system; beta vectors live in Z^d.  Entries may be negative in general
// (shift_nonnegative repairs that); the toric computation requires them
// nonnegative.
struct ConfigMatrix {
  int d = 0;
  int n = 0;
  std::vector<long> e;  // row-major

  static ConfigMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long at(int j, int i) const { return e[static_cast<std::size_t>(j) * n + i]; }
  long& at(int j, int i) { return e[static_cast<std::size_t>(j) * n + i]; }

  std::vector<long> column(int i) const;
  std::vector<long> row(int j) const;

  bool nonnegative() const;
  bool has_zero_column() const;
  // Index of a row with every entry equal to 1, or -1.
  int row_of_ones() const;
  // Rank over the rationals.
  int rank() const;

  // A * u for u in N_0^n (or any integer vector of length n).
  std::vector<long> apply(const ExpVec& u) const;
  std::vector<long> apply(const std::vector<long>& u) const;

  bool operator==(const ConfigMatrix& o) const { return d == o.d && n == o.n && e == o.e; }
};

}  // namespace ahg
