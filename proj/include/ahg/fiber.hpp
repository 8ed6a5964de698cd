#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ahg/config.hpp"
#include "ahg/expvec.hpp"
#include "ahg/rational.hpp"

namespace ahg {

// Solutions u in N_0^n of A u = beta, found by depth-first search with the
// per-coordinate bound u_i <= min over rows j with a_{ji} > 0 of
// floor(beta_j / a_{ji}).  Requires every column of A to be nonzero and all
// entries nonnegative (so the bound exists and the fiber is finite whenever
// a row of A is strictly positive on every column).  An empty result is a
// valid outcome, not an error.
std::vector<ExpVec> enumerate_fiber(const ConfigMatrix& A, const std::vector<long>& beta);

// First solution in the search order, or nullopt when the fiber is empty.
std::optional<ExpVec> first_fiber_point(const ConfigMatrix& A, const std::vector<long>& beta);

std::uint64_t fiber_count(const ConfigMatrix& A, const std::vector<long>& beta);

// Streaming visit of every fiber point in search order.
void fiber_scan(const ConfigMatrix& A, const std::vector<long>& beta,
                const std::function<void(const ExpVec&)>& visit);

// Sum over the fiber of X^u / u!, evaluated bottom-up so partial sums share
// small denominators (much faster than folding full-size terms one by one).
// `threads` > 1 splits the top-level branches across that many workers.
Rat fiber_sum(const ConfigMatrix& A, const std::vector<long>& beta, const std::vector<Rat>& X,
              int threads = 1);

}  // namespace ahg
