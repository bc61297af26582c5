#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motzcyc/descent_set.hpp"
#include "motzcyc/errors.hpp"
#include "motzcyc/jdt.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shape.hpp"
#include "motzcyc/tableau.hpp"

namespace motzcyc {

// The path <-> tableau correspondence: entry i sits in row 1, 2, or 3 of the
// three-row strip according to whether step i is U, D, or L. It maps n-step
// paths with k up-steps bijectively onto SYT(strip(n, k)) and preserves the
// (UDL-order) descent set; standardness of the filling is exactly the
// never-below-axis condition on the path.
inline SkewTableau gamma(const MotzkinPath& m) {
  const int n = m.size();
  const int k = m.count(Step::Up);
  SkewShape shape = three_row_strip(n, k);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 1; i <= n; ++i) {
    const Step s = m.step(i);
    const int r = s == Step::Up ? 1 : (s == Step::Down ? 2 : 3);
    rows[static_cast<std::size_t>(r) - 1].push_back(i);
  }
  return SkewTableau(std::move(shape), std::move(rows));
}

inline MotzkinPath gamma_inverse(const SkewTableau& t) {
  const auto dims = as_three_row_strip(t.shape());
  if (!dims)
    throw WrongShapeError("gamma_inverse needs a three-row strip, got shape " +
                          t.shape().str());
  const int n = dims->n;
  std::vector<Step> steps(static_cast<std::size_t>(n), Step::Level);
  const int rows = t.shape().rows();
  for (int r = 1; r <= rows; ++r) {
    // In the one-row presentation (m) the single row is the strip's third
    // row; otherwise presentation rows are strip rows.
    const Step s = rows == 1 ? Step::Level
                             : (r == 1 ? Step::Up
                                       : (r == 2 ? Step::Down : Step::Level));
    for (int v : t.row(r)) steps[static_cast<std::size_t>(v) - 1] = s;
  }
  return MotzkinPath(std::move(steps));
}

// Path -> straight-shape tableau: gamma followed by rectification.
inline SkewTableau gamma_tilde(const MotzkinPath& m) {
  return rectify(gamma(m));
}

// The cyclic extension of Des on SYT of a three-row strip with k >= 1:
// n joins the descent set iff
//   - 1 sits in row 3 and n sits in row 2, or
//   - 1 sits in row 1, n sits in row 2, and T(2, i-1) > T(1, i) for every
//     column pair i = 2..k (entries counted within the rows).
// Transported through gamma this is exactly the U > D > L statistic on paths.
inline CyclicDescentSet cyclic_descent_set_3row(const SkewTableau& t) {
  const auto dims = as_three_row_strip(t.shape());
  if (!dims)
    throw WrongShapeError("cyclic descent set needs a three-row strip, got shape " +
                          t.shape().str());
  const int n = dims->n;
  const int k = dims->k;
  if (k == 0)
    throw WrongShapeError(
        "three-row strip with k = 0 carries no cyclic descent extension");

  std::vector<int> d = descent_set_syt(t).members();
  const int row_of_1 = t.row_of(1);
  const int row_of_n = t.row_of(n);
  bool wrap = false;
  if (row_of_n == 2) {
    if (row_of_1 == 3) {
      wrap = true;
    } else if (row_of_1 == 1) {
      wrap = true;
      for (int i = 2; i <= k; ++i)
        if (t.entry(2, i - 1) <= t.entry(1, i)) { wrap = false; break; }
    }
  }
  if (wrap) d.push_back(n);
  return CyclicDescentSet(n, std::move(d));
}

}  // namespace motzcyc
