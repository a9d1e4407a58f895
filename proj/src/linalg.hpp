#ifndef RCANON_LINALG_HPP
#define RCANON_LINALG_HPP

#include <map>
#include <vector>

#include "rational.hpp"

namespace rcanon {

template <class F>
struct RrefResult {
  std::vector<std::vector<F>> rows;  // zero rows removed
  std::vector<int> pivots;           // strictly increasing pivot columns
};

// Exact reduced row echelon form over a field: pivots 1, zeros above and
// below, pivoting scans columns left to right and takes the first nonzero
// entry. Deterministic.
template <class F>
RrefResult<F> rref(std::vector<std::vector<F>> a) {
  RrefResult<F> out;
  std::size_t nrows = a.size();
  std::size_t ncols = nrows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (!is_zero(a[i][c])) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    F inv_pivot = a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] = a[r][j] / inv_pivot;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      F factor = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

// Applies RREF rows as elimination rules: for each pivot column with a rule,
// subtracts v[pivot] times the rule row. The result has zero in every pivot
// column that carries a rule.
std::vector<Rational> apply_rules(const std::map<int, std::vector<Rational>>& rules,
                                  std::vector<Rational> v);

}  // namespace rcanon

#endif
