#include "ahg/config.hpp"

#include "ahg/errors.hpp"
#include "ahg/matrix.hpp"
#include "ahg/rational.hpp"

namespace ahg {

ConfigMatrix ConfigMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  ConfigMatrix m;
  m.d = static_cast<int>(rows.size());
  m.n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  m.e.reserve(static_cast<std::size_t>(m.d) * m.n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.n)
      throw ParseError("matrix rows have inconsistent lengths");
    m.e.insert(m.e.end(), r.begin(), r.end());
  }
  return m;
}

std::vector<long> ConfigMatrix::column(int i) const {
  std::vector<long> c(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = at(j, i);
  return c;
}

std::vector<long> ConfigMatrix::row(int j) const {
  std::vector<long> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = at(j, i);
  return r;
}

bool ConfigMatrix::nonnegative() const {
  for (long v : e)
    if (v < 0) return false;
  return true;
}

bool ConfigMatrix::has_zero_column() const {
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int j = 0; j < d && zero; ++j) zero = at(j, i) == 0;
    if (zero) return true;
  }
  return false;
}

int ConfigMatrix::row_of_ones() const {
  for (int j = 0; j < d; ++j) {
    bool ones = true;
    for (int i = 0; i < n && ones; ++i) ones = at(j, i) == 1;
    if (ones) return j;
  }
  return -1;
}

int ConfigMatrix::rank() const {
  Matrix<Rat> m(d, n);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) m.at(j, i) = Rat(at(j, i));
  return static_cast<int>(rref(m).size());
}

std::vector<long> ConfigMatrix::apply(const ExpVec& u) const {
  std::vector<long> b(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(j)] += at(j, i) * u[static_cast<std::size_t>(i)];
  return b;
}

std::vector<long> ConfigMatrix::apply(const std::vector<long>& u) const {
  std::vector<long> b(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(j)] += at(j, i) * u[static_cast<std::size_t>(i)];
  return b;
}

}  // namespace ahg
