#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace motzcyc {

// The three Motzkin step types: U = (1,1), D = (1,-1), L = (1,0).
enum class Step : unsigned char { Up, Down, Level };

constexpr int rise(Step s) {
  return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

constexpr char to_char(Step s) {
  return s == Step::Up ? 'U' : (s == Step::Down ? 'D' : 'L');
}

constexpr std::optional<Step> step_from_char(char c) {
  switch (c) {
    case 'U': case 'u': return Step::Up;
    case 'D': case 'd': return Step::Down;
    case 'L': case 'l': return Step::Level;
    default: return std::nullopt;
  }
}

// A total order on the step types. The name lists the types from largest to
// smallest, e.g. UDL means U > D > L. Each order induces its own descent
// statistic on paths.
enum class StepOrder { UDL, ULD, LUD };

inline constexpr std::array<StepOrder, 3> all_step_orders{
    StepOrder::UDL, StepOrder::ULD, StepOrder::LUD};

// Rank of a step under an order; a larger rank is a larger step.
constexpr int rank(Step s, StepOrder order) {
  switch (order) {
    case StepOrder::UDL:
      return s == Step::Up ? 2 : (s == Step::Down ? 1 : 0);
    case StepOrder::ULD:
      return s == Step::Up ? 2 : (s == Step::Level ? 1 : 0);
    default:  // LUD
      return s == Step::Level ? 2 : (s == Step::Up ? 1 : 0);
  }
}

constexpr bool step_greater(Step a, Step b, StepOrder order) {
  return rank(a, order) > rank(b, order);
}

inline std::string to_string(StepOrder order) {
  switch (order) {
    case StepOrder::UDL: return "UDL";
    case StepOrder::ULD: return "ULD";
    default: return "LUD";
  }
}

inline std::optional<StepOrder> order_from_string(std::string_view text) {
  std::string up;
  up.reserve(text.size());
  for (char c : text) up.push_back(c >= 'a' && c <= 'z' ? char(c - 32) : c);
  if (up == "UDL") return StepOrder::UDL;
  if (up == "ULD") return StepOrder::ULD;
  if (up == "LUD") return StepOrder::LUD;
  return std::nullopt;
}

}  // namespace motzcyc
