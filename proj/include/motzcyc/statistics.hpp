#pragma once

#include <utility>
#include <vector>

#include "motzcyc/descent_set.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shift.hpp"
#include "motzcyc/step.hpp"

namespace motzcyc {

// Des(M) = { i in [n-1] : step_i > step_{i+1} under `order` }. The single
// comparison covers each order's case list (e.g. for U > D > L the descent
// pairs are exactly UD, UL, DL).
inline DescentSet descent_set(const MotzkinPath& m, StepOrder order) {
  std::vector<int> d;
  for (int i = 1; i < m.size(); ++i)
    if (step_greater(m.step(i), m.step(i + 1), order)) d.push_back(i);
  return DescentSet(m.size(), std::move(d));
}

// The cyclic extension: cDes(M) = Des(M), plus n when the wrap-around
// position i = n is a descent. Defined on M*_n only (throws for L^n).
//
//   U > D > L:  n is a descent iff the path ends with D and either starts
//               with L, or starts with U and has exactly one return.
//   U > L > D:  classified by the step before the last return D: n is a
//               descent iff that step is not L and the path either starts
//               with L, or starts with U and has exactly one return.
//   L > U > D:  defined by transport through phi_prime, which preserves the
//               linear descent set: cDes_LUD(M) = cDes_ULD(phi_prime(M)).
inline CyclicDescentSet cyclic_descent_set(const MotzkinPath& m,
                                           StepOrder order) {
  if (m.all_level()) throw AllLevelPathError();
  if (order == StepOrder::LUD)
    return cyclic_descent_set(phi_prime(m), StepOrder::ULD);

  const int n = m.size();
  std::vector<int> d = descent_set(m, order).members();
  const Step first = m.step(1);
  bool wrap = false;
  if (order == StepOrder::UDL) {
    wrap = m.step(n) == Step::Down &&
           (first == Step::Level ||
            (first == Step::Up && m.returns().size() == 1));
  } else {  // ULD
    const auto rets = m.returns();
    const bool before_last_return_not_level =
        m.step(rets.back() - 1) != Step::Level;
    wrap = before_last_return_not_level &&
           (first == Step::Level || (first == Step::Up && rets.size() == 1));
  }
  if (wrap) d.push_back(n);
  return CyclicDescentSet(n, std::move(d));
}

}  // namespace motzcyc
