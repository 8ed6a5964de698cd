#include "ahg/fiber.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <utility>

#include "ahg/errors.hpp"

namespace ahg {
namespace {

void check_fiber_pre(const ConfigMatrix& A) {
  if (!A.nonnegative())
    throw Error("fiber enumeration requires a nonnegative matrix; apply the nonnegative shift first");
  if (A.has_zero_column()) throw Error("fiber enumeration requires a matrix with no zero column");
}

bool negative_target(const std::vector<long>& beta) {
  for (long b : beta)
    if (b < 0) return true;
  return false;
}

// Depth-first search over u with running residual res = beta - A u.  Columns
// are processed tightest-initial-bound first; a branch dies as soon as some
// row has a nonzero residual but no remaining column touching it.
struct Walker {
  const ConfigMatrix& A;
  int n, d;
  std::vector<int> ord;    // column processing order
  std::vector<char> supp;  // (n+1) x d: does any column at depth >= k touch row j
  std::vector<long> res;
  ExpVec u;

  Walker(const ConfigMatrix& A_, const std::vector<long>& beta)
      : A(A_), n(A_.n), d(A_.d), res(beta), u(static_cast<std::size_t>(A_.n), 0) {
    std::vector<std::pair<long, int>> key(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      long b = std::numeric_limits<long>::max();
      for (int j = 0; j < d; ++j) {
        const long a = A.at(j, i);
        if (a > 0) b = std::min(b, beta[static_cast<std::size_t>(j)] / a);
      }
      key[static_cast<std::size_t>(i)] = {b, i};
    }
    std::sort(key.begin(), key.end());
    ord.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ord[static_cast<std::size_t>(i)] = key[static_cast<std::size_t>(i)].second;

    supp.assign(static_cast<std::size_t>(n + 1) * d, 0);
    for (int k = n - 1; k >= 0; --k)
      for (int j = 0; j < d; ++j)
        supp[static_cast<std::size_t>(k) * d + j] =
            static_cast<char>(supp[static_cast<std::size_t>(k + 1) * d + j] ||
                              A.at(j, ord[static_cast<std::size_t>(k)]) != 0);
  }

  bool dead(int depth) const {
    const char* s = supp.data() + static_cast<std::size_t>(depth) * d;
    for (int j = 0; j < d; ++j)
      if (res[static_cast<std::size_t>(j)] != 0 && !s[j]) return true;
    return false;
  }

  long bound(int col) const {
    long b = std::numeric_limits<long>::max();
    for (int j = 0; j < d; ++j) {
      const long a = A.at(j, col);
      if (a > 0) b = std::min(b, res[static_cast<std::size_t>(j)] / a);
    }
    return b;
  }

  void take(int col) {
    for (int j = 0; j < d; ++j) res[static_cast<std::size_t>(j)] -= A.at(j, col);
  }
  void give_back(int col, long times) {
    for (int j = 0; j < d; ++j) res[static_cast<std::size_t>(j)] += A.at(j, col) * times;
  }

  // Returns true when the caller asked to stop after the first point.
  bool scan(int depth, const std::function<void(const ExpVec&)>& visit, bool first_only) {
    if (dead(depth)) return false;
    if (depth == n) {
      visit(u);
      return first_only;
    }
    const int col = ord[static_cast<std::size_t>(depth)];
    const long b = bound(col);
    bool stop = false;
    long v = 0;
    for (;;) {
      u[static_cast<std::size_t>(col)] = v;
      if (scan(depth + 1, visit, first_only)) {
        stop = true;
        break;
      }
      if (v == b) break;
      take(col);
      ++v;
    }
    give_back(col, v);
    u[static_cast<std::size_t>(col)] = 0;
    return stop;
  }

  std::uint64_t count(int depth) {
    if (dead(depth)) return 0;
    if (depth == n) return 1;
    const int col = ord[static_cast<std::size_t>(depth)];
    const long b = bound(col);
    std::uint64_t total = 0;
    long v = 0;
    for (;;) {
      total += count(depth + 1);
      if (v == b) break;
      take(col);
      ++v;
    }
    give_back(col, v);
    return total;
  }

  // Subtree value of sum over completions of X^u / u! restricted to the
  // not-yet-assigned coordinates; the per-coordinate factor X_c^v / v! is
  // folded in level by level, so additions happen between values of similar
  // (small) size deep in the tree.
  Rat sum(int depth, const std::vector<Rat>& X) {
    if (dead(depth)) return Rat(0);
    if (depth == n) return Rat(1);
    const int col = ord[static_cast<std::size_t>(depth)];
    const long b = bound(col);
    Rat acc(0);
    Rat factor(1);  // X_col^v / v!
    long v = 0;
    for (;;) {
      Rat child = sum(depth + 1, X);
      if (!child.is_zero()) acc += v == 0 ? child : factor * child;
      if (v == b) break;
      take(col);
      ++v;
      factor *= X[static_cast<std::size_t>(col)];
      factor /= Rat(v);
    }
    give_back(col, v);
    return acc;
  }
};

ConfigMatrix drop_column(const ConfigMatrix& A, int col) {
  ConfigMatrix B;
  B.d = A.d;
  B.n = A.n - 1;
  B.e.reserve(static_cast<std::size_t>(B.d) * B.n);
  for (int j = 0; j < A.d; ++j)
    for (int i = 0; i < A.n; ++i)
      if (i != col) B.e.push_back(A.at(j, i));
  return B;
}

}  // namespace

std::vector<ExpVec> enumerate_fiber(const ConfigMatrix& A, const std::vector<long>& beta) {
  check_fiber_pre(A);
  std::vector<ExpVec> out;
  if (negative_target(beta)) return out;
  Walker w(A, beta);
  w.scan(0, [&](const ExpVec& u) { out.push_back(u); }, false);
  return out;
}

std::optional<ExpVec> first_fiber_point(const ConfigMatrix& A, const std::vector<long>& beta) {
  check_fiber_pre(A);
  if (negative_target(beta)) return std::nullopt;
  std::optional<ExpVec> found;
  Walker w(A, beta);
  w.scan(0, [&](const ExpVec& u) { found = u; }, true);
  return found;
}

std::uint64_t fiber_count(const ConfigMatrix& A, const std::vector<long>& beta) {
  check_fiber_pre(A);
  if (negative_target(beta)) return 0;
  Walker w(A, beta);
  return w.count(0);
}

void fiber_scan(const ConfigMatrix& A, const std::vector<long>& beta,
                const std::function<void(const ExpVec&)>& visit) {
  check_fiber_pre(A);
  if (negative_target(beta)) return;
  Walker w(A, beta);
  w.scan(0, visit, false);
}

Rat fiber_sum(const ConfigMatrix& A, const std::vector<long>& beta, const std::vector<Rat>& X,
              int threads) {
  check_fiber_pre(A);
  if (negative_target(beta)) return Rat(0);
  if (threads <= 1 || A.n <= 1) {
    Walker w(A, beta);
    return w.sum(0, X);
  }

  // Fix the first search coordinate's value and farm the subtrees out to
  // workers; each subtree is an independent fiber sum of the reduced matrix.
  Walker probe(A, beta);
  const int col = probe.ord[0];
  const long b = probe.bound(col);
  const ConfigMatrix B = drop_column(A, col);
  std::vector<Rat> XB;
  XB.reserve(X.size() - 1);
  for (int i = 0; i < A.n; ++i)
    if (i != col) XB.push_back(X[static_cast<std::size_t>(i)]);

  const int nw = static_cast<int>(std::min<long>(threads, b + 1));
  std::vector<Rat> partial(static_cast<std::size_t>(nw), Rat(0));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  for (int t = 0; t < nw; ++t) {
    pool.emplace_back([&, t]() {
      Rat local(0);
      for (long v = t; v <= b; v += nw) {
        std::vector<long> target = beta;
        for (int j = 0; j < A.d; ++j) target[static_cast<std::size_t>(j)] -= v * A.at(j, col);
        Rat factor = X[static_cast<std::size_t>(col)].pow(static_cast<unsigned long>(v)) /
                     Rat(factorial(static_cast<unsigned long>(v)));
        Walker w(B, target);
        Rat s = w.sum(0, XB);
        if (!s.is_zero()) local += factor * s;
      }
      partial[static_cast<std::size_t>(t)] = std::move(local);
    });
  }
  for (auto& th : pool) th.join();
  Rat total(0);
  for (const Rat& p : partial) total += p;
  return total;
}

}  // namespace ahg
