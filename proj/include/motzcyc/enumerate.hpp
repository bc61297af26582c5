#pragma once

#include <optional>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/path.hpp"

namespace motzcyc {

namespace detail {

// Shared backtracking walker. Steps are tried in character order D < L < U,
// so the output is in lexicographic order of the step strings. If `levels`
// is set, only paths with exactly that many L steps are emitted; the walk
// then prunes branches that cannot hit the quota.
inline void walk_paths(int n, std::optional<int> levels,
                       std::vector<MotzkinPath>& out) {
  std::vector<Step> word;
  word.reserve(static_cast<std::size_t>(n));
  // h = current height, used = L steps so far; i = steps placed.
  auto feasible_levels = [&](int i, int h, int used) {
    if (!levels) return true;
    if (used > *levels) return false;
    // The h units of height must be spent on D steps; everything else left
    // over could be L, so `used + (remaining - h)` caps the final L count.
    const int remaining = n - i;
    return used + (remaining - h) >= *levels;
  };
  auto rec = [&](auto&& self, int i, int h, int used) -> void {
    if (i == n) {
      out.emplace_back(word);
      return;
    }
    const int remaining = n - i;
    // D first, then L, then U ('D' < 'L' < 'U').
    if (h > 0 && feasible_levels(i + 1, h - 1, used)) {
      word.push_back(Step::Down);
      self(self, i + 1, h - 1, used);
      word.pop_back();
    }
    if (h <= remaining - 1 && feasible_levels(i + 1, h, used + 1)) {
      word.push_back(Step::Level);
      self(self, i + 1, h, used + 1);
      word.pop_back();
    }
    if (h + 1 <= remaining - 1 && feasible_levels(i + 1, h + 1, used)) {
      word.push_back(Step::Up);
      self(self, i + 1, h + 1, used);
      word.pop_back();
    }
  };
  if (n == 0) {
    if (!levels || *levels == 0) out.emplace_back();
    return;
  }
  rec(rec, 0, 0, 0);
}

}  // namespace detail

// All Motzkin paths with n steps, lexicographically by step string
// ('D' < 'L' < 'U'). |result| = motzkin_number(n).
inline std::vector<MotzkinPath> enumerate_paths(int n) {
  if (n < 0) throw Error("enumerate_paths: n must be >= 0");
  std::vector<MotzkinPath> out;
  detail::walk_paths(n, std::nullopt, out);
  return out;
}

// All Motzkin paths with n steps and exactly k level steps, in the same
// order. Empty when n - k is odd or k > n. The images over k = 0..n
// partition enumerate_paths(n).
inline std::vector<MotzkinPath> enumerate_paths_fixed_horizontal(int n, int k) {
  if (n < 0) throw Error("enumerate_paths_fixed_horizontal: n must be >= 0");
  if (k < 0) throw Error("enumerate_paths_fixed_horizontal: k must be >= 0");
  std::vector<MotzkinPath> out;
  detail::walk_paths(n, k, out);
  return out;
}

}  // namespace motzcyc
