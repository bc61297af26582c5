#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzcyc/errors.hpp"

namespace motzcyc {

namespace detail {

inline std::vector<int> normalize_members(std::vector<int> members, int n,
                                          int max_value, const char* what) {
  if (n < 0) throw Error(std::string(what) + ": n must be >= 0");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members)
    if (v < 1 || v > max_value)
      throw Error(std::string(what) + ": member " + std::to_string(v) +
                  " outside 1.." + std::to_string(max_value));
  return members;
}

inline std::string join_members(const std::vector<int>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(members[i]);
  }
  return out;
}

// Parses "2,3,5" (also accepts "" and "-" for the empty set).
inline std::vector<int> parse_members(std::string_view text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok.empty()) throw Error("descent set: empty entry in \"" + std::string(text) + "\"");
    int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw Error("descent set: bad character '" + std::string(1, c) + "'");
      value = value * 10 + (c - '0');
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

// A descent set of an n-element object: a subset of {1, ..., n-1}, kept
// sorted. Serializes as ascending comma-separated values ("2,3,5"; empty set
// serializes to the empty string).
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::vector<int> members)
      : n_(n),
        members_(detail::normalize_members(std::move(members), n, n - 1,
                                           "DescentSet")) {}

  static DescentSet parse(int n, std::string_view text) {
    return DescentSet(n, detail::parse_members(text));
  }

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }
  std::string str() const { return detail::join_members(members_); }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

// A cyclic descent set: a subset of {1, ..., n}. A valid cyclic extension is
// never empty and never all of [n] (the non-Escher condition); the type does
// not force that, it is what the verification suites check.
class CyclicDescentSet {
 public:
  CyclicDescentSet() = default;
  CyclicDescentSet(int n, std::vector<int> members)
      : n_(n),
        members_(detail::normalize_members(std::move(members), n, n,
                                           "CyclicDescentSet")) {}

  static CyclicDescentSet parse(int n, std::string_view text) {
    return CyclicDescentSet(n, detail::parse_members(text));
  }

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  // Restriction to {1, ..., n-1}: drops n if present.
  DescentSet restriction() const {
    std::vector<int> r = members_;
    if (!r.empty() && r.back() == n_) r.pop_back();
    return DescentSet(n_, std::move(r));
  }

  // Image under i -> i+1 (mod n, values in 1..n).
  CyclicDescentSet rotated() const {
    std::vector<int> r;
    r.reserve(members_.size());
    for (int v : members_) r.push_back(v % n_ + 1);
    return CyclicDescentSet(n_, std::move(r));
  }

  // Empty or full — the configurations a cyclic extension must avoid.
  bool escher() const {
    return members_.empty() || static_cast<int>(members_.size()) == n_;
  }

  std::string str() const { return detail::join_members(members_); }

  friend bool operator==(const CyclicDescentSet&, const CyclicDescentSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

}  // namespace motzcyc
