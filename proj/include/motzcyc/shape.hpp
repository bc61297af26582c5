#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzcyc/errors.hpp"

namespace motzcyc {

// A skew shape outer/inner: two partitions with inner_r <= outer_r. Trailing
// zero parts are stripped on construction, but *presentation matters for
// equality*: (n,n,n)/(n,n) — the three-row strip with empty first rows — is a
// different shape object than the one-row (n). Rows and columns are 1-based.
class SkewShape {
 public:
  SkewShape() = default;

  SkewShape(std::vector<int> outer, std::vector<int> inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    while (!outer_.empty() && outer_.back() == 0) outer_.pop_back();
    while (!inner_.empty() && inner_.back() == 0) inner_.pop_back();
    if (inner_.size() > outer_.size())
      throw ShapeError("inner shape has more rows than outer");
    for (std::size_t r = 0; r < outer_.size(); ++r) {
      if (outer_[r] < 0 || (r + 1 < outer_.size() && outer_[r] < outer_[r + 1]))
        throw ShapeError("outer shape is not a partition");
    }
    for (std::size_t r = 0; r < inner_.size(); ++r) {
      if (inner_[r] < 0 || (r + 1 < inner_.size() && inner_[r] < inner_[r + 1]))
        throw ShapeError("inner shape is not a partition");
      if (inner_[r] > outer_[r])
        throw ShapeError("inner shape pokes out of outer in row " +
                         std::to_string(r + 1));
    }
  }

  int rows() const { return static_cast<int>(outer_.size()); }
  int outer(int r) const {
    return r >= 1 && r <= rows() ? outer_[static_cast<std::size_t>(r) - 1] : 0;
  }
  int inner(int r) const {
    return r >= 1 && r <= static_cast<int>(inner_.size())
               ? inner_[static_cast<std::size_t>(r) - 1]
               : 0;
  }
  const std::vector<int>& outer_parts() const { return outer_; }
  const std::vector<int>& inner_parts() const { return inner_; }

  int cells() const {
    int c = 0;
    for (int r = 1; r <= rows(); ++r) c += outer(r) - inner(r);
    return c;
  }
  int row_cells(int r) const { return outer(r) - inner(r); }
  bool straight() const { return inner_.empty(); }
  bool contains(int r, int c) const {
    return r >= 1 && r <= rows() && c > inner(r) && c <= outer(r);
  }

  // "5,4,2/2" for skew shapes, "5,4,2" when the inner shape is empty.
  std::string str() const {
    auto join = [](const std::vector<int>& parts) {
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(parts[i]);
      }
      return s;
    };
    std::string out = join(outer_);
    if (!inner_.empty()) out += "/" + join(inner_);
    return out;
  }

  static SkewShape parse(std::string_view text) {
    auto parse_parts = [](std::string_view part) {
      std::vector<int> out;
      if (part.empty()) return out;
      std::size_t pos = 0;
      while (pos <= part.size()) {
        const std::size_t comma = part.find(',', pos);
        const std::string_view tok = part.substr(
            pos, comma == std::string_view::npos ? comma : comma - pos);
        if (tok.empty())
          throw TableauParseError("shape: empty part in \"" + std::string(part) + "\"");
        int value = 0;
        for (char c : tok) {
          if (c < '0' || c > '9')
            throw TableauParseError("shape: bad character '" + std::string(1, c) + "'");
          value = value * 10 + (c - '0');
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      return out;
    };
    const std::size_t slash = text.find('/');
    std::vector<int> outer =
        parse_parts(slash == std::string_view::npos ? text : text.substr(0, slash));
    std::vector<int> inner =
        slash == std::string_view::npos ? std::vector<int>{}
                                        : parse_parts(text.substr(slash + 1));
    try {
      return SkewShape(std::move(outer), std::move(inner));
    } catch (const ShapeError& e) {
      throw TableauParseError(std::string("shape \"") + std::string(text) +
                              "\": " + e.what());
    }
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  std::vector<int> outer_;
  std::vector<int> inner_;
};

// The three-row strip carrying n-step paths with k up-steps:
// (n-k, n-k, n-2k) / (n-2k, n-2k). Rows 1 and 2 each hold k cells in columns
// n-2k+1 .. n-k; row 3 holds n-2k cells in columns 1 .. n-2k and shares no
// column with them. Degenerate presentations after zero-stripping:
// k = n/2 gives the straight (k, k); k = 0 gives (n, n, n)/(n, n).
struct StripDims {
  int n = 0;
  int k = 0;
  friend bool operator==(const StripDims&, const StripDims&) = default;
};

inline SkewShape three_row_strip(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n)
    throw ShapeError("three_row_strip: need 0 <= 2k <= n, got n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
  return SkewShape({n - k, n - k, n - 2 * k}, {n - 2 * k, n - 2 * k});
}

// Recognizes the presentations produced by three_row_strip (plus the one-row
// (m), which is how a rectified all-level image prints). Returns the (n, k).
inline std::optional<StripDims> as_three_row_strip(const SkewShape& shape) {
  const auto& outer = shape.outer_parts();
  const auto& inner = shape.inner_parts();
  if (outer.empty()) return inner.empty() ? std::optional<StripDims>({0, 0})
                                          : std::nullopt;
  if (inner.empty()) {
    if (outer.size() == 1) return StripDims{outer[0], 0};
    if (outer.size() == 2 && outer[0] == outer[1])
      return StripDims{2 * outer[0], outer[0]};
    return std::nullopt;
  }
  if (outer.size() == 3 && inner.size() == 2 && outer[0] == outer[1] &&
      inner[0] == inner[1] && inner[0] == outer[2] && outer[0] >= outer[2])
    return StripDims{2 * outer[0] - outer[2], outer[0] - outer[2]};
  return std::nullopt;
}

}  // namespace motzcyc
