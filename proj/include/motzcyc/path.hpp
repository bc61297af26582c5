#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/step.hpp"

namespace motzcyc {

// A Motzkin path: a word over {U, D, L} whose height profile stays >= 0 and
// ends at 0. Immutable after construction; the constructor rejects anything
// else. Step positions on the public surface are 1-based throughout, matching
// how descent sets are indexed.
class MotzkinPath {
 public:
  MotzkinPath() = default;

  explicit MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      h += rise(steps_[i]);
      if (h < 0)
        throw NotAPathError(static_cast<int>(i) + 1, "path goes below the x-axis");
    }
    if (h != 0)
      throw NotAPathError(static_cast<int>(steps_.size()),
                          "path ends at height " + std::to_string(h));
  }

  static MotzkinPath parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      auto s = step_from_char(text[i]);
      if (!s) throw InvalidCharacterError(static_cast<int>(i) + 1, text[i]);
      steps.push_back(*s);
    }
    return MotzkinPath(std::move(steps));
  }

  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }

  // 1-based access; i in 1..size().
  Step step(int i) const { return steps_[static_cast<std::size_t>(i) - 1]; }

  int count(Step s) const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), s));
  }
  int horizontal_count() const { return count(Step::Level); }

  // True for L^n, including the empty path (n = 0).
  bool all_level() const {
    return std::all_of(steps_.begin(), steps_.end(),
                       [](Step s) { return s == Step::Level; });
  }

  // Height after the first i steps; height_after(0) == 0.
  int height_after(int i) const {
    int h = 0;
    for (int j = 0; j < i; ++j) h += rise(steps_[static_cast<std::size_t>(j)]);
    return h;
  }

  // Positions (1-based) of D steps that end on the x-axis.
  std::vector<int> returns() const {
    std::vector<int> out;
    int h = 0;
    for (int i = 0; i < size(); ++i) {
      h += rise(steps_[static_cast<std::size_t>(i)]);
      if (steps_[static_cast<std::size_t>(i)] == Step::Down && h == 0)
        out.push_back(i + 1);
    }
    return out;
  }

  // Positions (1-based) of U steps that start on the x-axis.
  std::vector<int> starts() const {
    std::vector<int> out;
    int h = 0;
    for (int i = 0; i < size(); ++i) {
      if (steps_[static_cast<std::size_t>(i)] == Step::Up && h == 0)
        out.push_back(i + 1);
      h += rise(steps_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(to_char(s));
    return out;
  }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<Step> steps_;
};

}  // namespace motzcyc
