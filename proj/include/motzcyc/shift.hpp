#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/step.hpp"

namespace motzcyc {

// The cyclic shift maps on M*_n (all n-step paths except L^n). Each one
// rotates the corresponding cyclic descent set by +1 (mod n):
//
//   rho       for the U > D > L statistic,
//   rho_hat   for the U > L > D statistic,
//   shift(-, LUD) = phi_prime^-1 . rho_hat . phi_prime   for L > U > D.
//
// phi and phi_prime are the letter bijections that transport descent sets
// between the statistics: Des_ULD(M) = Des_UDL(phi(M)) and
// Des_LUD(M) = Des_ULD(phi_prime(M)); they are defined on all of M_n.

namespace detail {

inline void require_shiftable(const MotzkinPath& m) {
  if (m.all_level()) throw AllLevelPathError();
}

// Number of consecutive Level steps in s ending at index `last` (0-based,
// inclusive); 0 if last < 0 or s[last] != L.
inline int level_run_ending_at(const std::vector<Step>& s, int last) {
  int i = 0;
  while (last - i >= 0 && s[static_cast<std::size_t>(last - i)] == Step::Level) ++i;
  return i;
}

// Number of consecutive Level steps starting at index `first` (0-based).
inline int level_run_starting_at(const std::vector<Step>& s, int first) {
  int i = 0;
  const int n = static_cast<int>(s.size());
  while (first + i < n && s[static_cast<std::size_t>(first + i)] == Step::Level) ++i;
  return i;
}

// Core of the four letter bijections phi / phi_inverse / phi_prime /
// phi_prime_inverse. Within each maximal block avoiding `fixed`, every
// adjacent descent pair (a, b) becomes (b, a), and each maximal descent-free
// run between the pairs (and the block edges) is reversed literally.
inline std::vector<Step> rewrite_blocks(std::vector<Step> w, Step fixed,
                                        Step a, Step b) {
  const int n = static_cast<int>(w.size());
  int i = 0;
  while (i < n) {
    if (w[static_cast<std::size_t>(i)] == fixed) { ++i; continue; }
    int e = i;
    while (e < n && w[static_cast<std::size_t>(e)] != fixed) ++e;
    int seg = i;  // start of the current descent-free run
    for (int p = i; p < e;) {
      if (p + 1 < e && w[static_cast<std::size_t>(p)] == a &&
          w[static_cast<std::size_t>(p + 1)] == b) {
        std::reverse(w.begin() + seg, w.begin() + p);
        w[static_cast<std::size_t>(p)] = b;
        w[static_cast<std::size_t>(p + 1)] = a;
        p += 2;
        seg = p;
      } else {
        ++p;
      }
    }
    std::reverse(w.begin() + seg, w.begin() + e);
    i = e;
  }
  return w;
}

}  // namespace detail

// Des_ULD(M) = Des_UDL(phi(M)); U steps stay fixed, the {D, L} blocks are
// rewritten so each (L, D) descent pair becomes (D, L).
inline MotzkinPath phi(const MotzkinPath& m) {
  return MotzkinPath(
      detail::rewrite_blocks(m.steps(), Step::Up, Step::Level, Step::Down));
}

inline MotzkinPath phi_inverse(const MotzkinPath& m) {
  return MotzkinPath(
      detail::rewrite_blocks(m.steps(), Step::Up, Step::Down, Step::Level));
}

// Des_LUD(M) = Des_ULD(phi_prime(M)); D steps stay fixed, each (L, U) descent
// pair in the {U, L} blocks becomes (U, L).
inline MotzkinPath phi_prime(const MotzkinPath& m) {
  return MotzkinPath(
      detail::rewrite_blocks(m.steps(), Step::Down, Step::Level, Step::Up));
}

inline MotzkinPath phi_prime_inverse(const MotzkinPath& m) {
  return MotzkinPath(
      detail::rewrite_blocks(m.steps(), Step::Down, Step::Up, Step::Level));
}

// Cyclic shift for the U > D > L statistic.
//   final step L:  P L        ->  L P
//   final step D:  P U P' D   ->  U P D P'   (U = the last step starting on
//                                             the x-axis)
inline MotzkinPath rho(const MotzkinPath& m) {
  detail::require_shiftable(m);
  const auto& s = m.steps();
  const int n = m.size();
  std::vector<Step> out;
  out.reserve(static_cast<std::size_t>(n));
  if (s.back() == Step::Level) {
    out.push_back(Step::Level);
    out.insert(out.end(), s.begin(), s.end() - 1);
  } else {
    const int u = m.starts().back();  // 1-based
    out.push_back(Step::Up);
    out.insert(out.end(), s.begin(), s.begin() + (u - 1));  // P
    out.push_back(Step::Down);
    out.insert(out.end(), s.begin() + u, s.end() - 1);  // P'
  }
  return MotzkinPath(std::move(out));
}

//   first step L:  L P        ->  P L
//   first step U:  U P D P'   ->  P U P' D   (D = the first return)
inline MotzkinPath rho_inverse(const MotzkinPath& m) {
  detail::require_shiftable(m);
  const auto& s = m.steps();
  const int n = m.size();
  std::vector<Step> out;
  out.reserve(static_cast<std::size_t>(n));
  if (s.front() == Step::Level) {
    out.insert(out.end(), s.begin() + 1, s.end());
    out.push_back(Step::Level);
  } else {
    const int r = m.returns().front();  // 1-based
    out.insert(out.end(), s.begin() + 1, s.begin() + (r - 1));  // P
    out.push_back(Step::Up);
    out.insert(out.end(), s.begin() + r, s.end());  // P'
    out.push_back(Step::Down);
  }
  return MotzkinPath(std::move(out));
}

// Cyclic shift for the U > L > D statistic. Classified by the step just
// before the last return D (write j for the number of trailing L steps):
//
//   U:  P L^i U D L^j          ->  U P D L^i              (j = 0)
//                              ->  U P L^{i+1} D L^{j-1}  (j >= 1)
//   L:  P L^i D L^j  (i >= 1)  ->  L P D L^{i-1}          (j = 0)
//                              ->  L P L^i D L^{j-1}      (j >= 1)
//   D:  P L^i U L^k P' D L^j   ->  U P D L^i P' L^j       (k = 0)
//       (U = last start)       ->  U P L^{i+1} D L^{k-1} P' L^j  (k >= 1)
inline MotzkinPath rho_hat(const MotzkinPath& m) {
  detail::require_shiftable(m);
  const auto& s = m.steps();
  const int n = m.size();
  const int r = m.returns().back();  // 1-based; r >= 2 always
  const int R = r - 1;               // 0-based index of the last return D
  const int j = n - r;               // trailing L count

  std::vector<Step> out;
  out.reserve(static_cast<std::size_t>(n));
  auto emit = [&](int first, int last) {  // 0-based half-open range of s
    out.insert(out.end(), s.begin() + first, s.begin() + last);
  };
  auto emit_levels = [&](int c) {
    out.insert(out.end(), static_cast<std::size_t>(c), Step::Level);
  };

  switch (s[static_cast<std::size_t>(R - 1)]) {
    case Step::Up: {
      const int i = detail::level_run_ending_at(s, R - 2);
      // P = s[0 .. R-1-i)
      out.push_back(Step::Up);
      emit(0, R - 1 - i);
      if (j == 0) {
        out.push_back(Step::Down);
        emit_levels(i);
      } else {
        emit_levels(i + 1);
        out.push_back(Step::Down);
        emit_levels(j - 1);
      }
      break;
    }
    case Step::Level: {
      const int i = detail::level_run_ending_at(s, R - 1);
      // P = s[0 .. R-i)
      out.push_back(Step::Level);
      emit(0, R - i);
      if (j == 0) {
        out.push_back(Step::Down);
        emit_levels(i - 1);
      } else {
        emit_levels(i);
        out.push_back(Step::Down);
        emit_levels(j - 1);
      }
      break;
    }
    default: {  // Step::Down
      const int u = m.starts().back();  // 1-based position of the last start
      const int U0 = u - 1;             // 0-based
      const int i = detail::level_run_ending_at(s, U0 - 1);
      const int k = detail::level_run_starting_at(s, U0 + 1);
      // P = s[0 .. U0-i), P' = s[U0+1+k .. R)
      out.push_back(Step::Up);
      emit(0, U0 - i);
      if (k == 0) {
        out.push_back(Step::Down);
        emit_levels(i);
        emit(U0 + 1, R);
      } else {
        emit_levels(i + 1);
        out.push_back(Step::Down);
        emit_levels(k - 1);
        emit(U0 + 1 + k, R);
      }
      emit_levels(j);
      break;
    }
  }
  return MotzkinPath(std::move(out));
}

// rho and rho_hat are conjugate through phi (rho = phi . rho_hat . phi^-1),
// so the inverse shift is computed by conjugating rho_inverse.
inline MotzkinPath rho_hat_inverse(const MotzkinPath& m) {
  return phi_inverse(rho_inverse(phi(m)));
}

// The shift matching the cyclic descent statistic of `order`.
inline MotzkinPath shift(const MotzkinPath& m, StepOrder order) {
  switch (order) {
    case StepOrder::UDL: return rho(m);
    case StepOrder::ULD: return rho_hat(m);
    default: return phi_prime_inverse(rho_hat(phi_prime(m)));
  }
}

inline MotzkinPath shift_inverse(const MotzkinPath& m, StepOrder order) {
  switch (order) {
    case StepOrder::UDL: return rho_inverse(m);
    case StepOrder::ULD: return rho_hat_inverse(m);
    default: return phi_prime_inverse(rho_hat_inverse(phi_prime(m)));
  }
}

}  // namespace motzcyc
